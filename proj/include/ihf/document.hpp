#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihf/complex.hpp"
#include "ihf/iota.hpp"

namespace ihf {

// Self-describing textual form of an iota-complex (format "ihf/1"):
//   {
//     "format": "ihf/1",
//     "generators": [{"name": "a", "grading": "-5/2"}, ...],
//     "diff":  [["src", "tgt", u_exponent], ...],
//     "iota":  [["src", "tgt", u_exponent], ...],
//     "metadata": {"label": "...", "pinned_d": "-1/2"}   // optional
//   }
// Gradings are exact fractions in lowest terms.  Every stored U-exponent is
// redundant (the gradings force it) and is checked on parse: a mismatch is
// reported as a homogeneity error naming the offending entry.
struct ComplexDocument {
  IotaComplex complex;
  std::string label;  // empty when absent
  std::optional<Grading> pinned_d;
};

// Throws parse_error for malformed text / wrong shape, structural_error for
// well-formed documents describing an inconsistent complex (duplicate or
// unknown generators, exponent/grading mismatches).
ComplexDocument parse_complex(const std::string& text);
std::string serialize_complex(const ComplexDocument& doc);

// One map entry in document form: src |-> U^exponent dst (+ ...).
struct EntryTriple {
  std::string src, dst;
  long long exponent = 0;
  bool operator==(const EntryTriple& o) const {
    return src == o.src && dst == o.dst && exponent == o.exponent;
  }
};

std::vector<EntryTriple> map_entries(const MonoMatrix& m);
// Rebuilds a matrix from document entries, validating names and exponents
// against the bases (throws structural_error on any mismatch).
MonoMatrix map_from_entries(const Basis& rows, const Basis& cols,
                            const Grading& delta,
                            const std::vector<EntryTriple>& entries);

// Machine-readable result record (format "ihf-result/1"); every field after
// `input` is optional and round-trips bit-exactly through parse_result.
struct TorsionPart {
  Grading top;
  long long order = 1;
  bool operator==(const TorsionPart& o) const {
    return top == o.top && order == o.order;
  }
};

struct LocalMapReport {
  std::string from, to;
  bool found = false;
  std::vector<EntryTriple> f, h;  // empty unless found
  bool operator==(const LocalMapReport& o) const {
    return from == o.from && to == o.to && found == o.found && f == o.f &&
           h == o.h;
  }
};

struct ResultDocument {
  std::string input;
  std::optional<Grading> d, d_lower, d_upper;
  std::optional<std::vector<Grading>> hfi_towers;
  std::optional<std::vector<TorsionPart>> hfi_torsion;
  std::optional<std::vector<InducedEntry>> q_action;
  std::optional<std::vector<LocalMapReport>> local_maps;

  bool operator==(const ResultDocument& o) const {
    return input == o.input && d == o.d && d_lower == o.d_lower &&
           d_upper == o.d_upper && hfi_towers == o.hfi_towers &&
           hfi_torsion == o.hfi_torsion && q_action == o.q_action &&
           local_maps == o.local_maps;
  }
};

ResultDocument parse_result(const std::string& text);
std::string serialize_result(const ResultDocument& doc);

// Several records as one JSON array; parse_results also accepts a single
// record, returning it as a one-element list.
std::vector<ResultDocument> parse_results(const std::string& text);
std::string serialize_results(const std::vector<ResultDocument>& docs);

}  // namespace ihf
