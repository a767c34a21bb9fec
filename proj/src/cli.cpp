#include "ihf/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "ihf/document.hpp"
#include "ihf/involutive.hpp"
#include "ihf/local_equiv.hpp"
#include "ihf/presets.hpp"

namespace ihf {

namespace {

struct Input {
  IotaComplex complex;
  std::string label;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw argument_error("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Resolves "preset:NAME" or a document path.  File inputs are untrusted and
// get the full axiom check; presets are validated at construction.
Input load_input(const std::string& spec, bool check_files = true) {
  if (spec.rfind("preset:", 0) == 0) {
    std::string name = spec.substr(7);
    return {preset(name), name};
  }
  ComplexDocument doc = parse_complex(slurp(spec));
  if (check_files) {
    IotaReport rep = validate_iota(doc.complex);
    if (!rep.ok()) {
      std::string msg = "input '" + spec + "' is not a valid iota-complex:";
      for (const auto& v : rep.all_violations()) msg += "\n  - " + v;
      throw structural_error(msg);
    }
  }
  return {std::move(doc.complex), doc.label.empty() ? spec : doc.label};
}

std::string summand_str(const Grading& top, int order) {
  if (order == 0) return "Z2[U]_(" + top.str() + ")";
  if (order == 1) return "(Z2)_(" + top.str() + ")";
  return "(Z2[U]/U^" + std::to_string(order) + ")_(" + top.str() + ")";
}

std::string summand_list(const HomologyModule& h) {
  std::string s;
  for (int i = 0; i < h.summand_count(); ++i) {
    if (!s.empty()) s += " + ";
    s += summand_str(h.summand(i).top, h.summand(i).order);
  }
  return s.empty() ? "0" : s;
}

// F2-dimension of the torsion part, grading by grading (descending).
std::string torsion_dim_table(const HomologyModule& h) {
  std::map<Grading, int> dim;
  for (const auto& t : h.torsion) {
    for (int k = 0; k < t.order; ++k) dim[t.top - Grading(2 * k)] += 1;
  }
  std::string s;
  for (auto it = dim.rbegin(); it != dim.rend(); ++it) {
    if (!s.empty()) s += "  ";
    s += it->first.str() + ": " + std::to_string(it->second);
  }
  return s;
}

std::string q_action_table(const InvolutiveSummary& sum) {
  std::string s;
  for (int i = 0; i < sum.hfi.summand_count(); ++i) {
    std::string rhs;
    for (const auto& e : sum.q_action) {
      if (e.src != i) continue;
      if (!rhs.empty()) rhs += " + ";
      if (e.exponent > 0) rhs += "U^" + std::to_string(e.exponent) + " ";
      rhs += "s" + std::to_string(e.dst);
    }
    if (!s.empty()) s += "; ";
    s += "Q s" + std::to_string(i) + " = " + (rhs.empty() ? "0" : rhs);
  }
  return s;
}

ResultDocument result_of(const std::string& label,
                         const InvolutiveSummary& sum) {
  ResultDocument r;
  r.input = label;
  r.d = sum.d;
  r.d_lower = sum.d_lower;
  r.d_upper = sum.d_upper;
  std::vector<Grading> towers;
  for (const auto& t : sum.hfi.towers) towers.push_back(t.top);
  r.hfi_towers = std::move(towers);
  std::vector<TorsionPart> torsion;
  for (const auto& t : sum.hfi.torsion)
    torsion.push_back({t.top, t.order});
  r.hfi_torsion = std::move(torsion);
  r.q_action = sum.q_action;
  return r;
}

std::string dinv_line(const InvolutiveSummary& s) {
  return "(d, d_lower, d_upper) = (" + s.d.str() + ", " + s.d_lower.str() +
         ", " + s.d_upper.str() + ")";
}

class Emitter {
 public:
  Emitter(std::ostream& out, std::string path) : out_(out), path_(std::move(path)) {}

  void operator()(const std::string& text) {
    if (path_.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(path_, std::ios::binary);
    if (!f) throw argument_error("cannot write output file '" + path_ + "'");
    f << text;
  }

 private:
  std::ostream& out_;
  std::string path_;
};

Input tensor_all(const std::vector<Input>& inputs) {
  Input acc = inputs[0];
  for (size_t i = 1; i < inputs.size(); ++i) {
    acc.complex = tensor(acc.complex, inputs[i].complex);
    acc.label += " # " + inputs[i].label;
  }
  return acc;
}

std::vector<Input> load_all(const std::vector<std::string>& specs,
                            long long copies) {
  std::vector<Input> inputs;
  for (long long k = 0; k < copies; ++k) {
    for (const auto& s : specs) inputs.push_back(load_input(s));
  }
  return inputs;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const argument_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const structural_error& e) {
    err << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Involutive invariants of finite F2[U] complexes"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  std::string out_path;
  bool json = false;
  bool sum = false;
  long long copies = 1;

  auto add_common = [&](CLI::App* sub, int min_inputs, int max_inputs) {
    sub->add_option("inputs", inputs,
                    "complex documents or preset:NAME references")
        ->required()
        ->expected(min_inputs, max_inputs);
    sub->add_option("--out", out_path, "write the primary output to a file");
    return sub;
  };

  CLI::App* c_validate = app.add_subcommand(
      "validate", "check the iota-complex axioms of one input");
  add_common(c_validate, 1, 1);

  CLI::App* c_homology = app.add_subcommand(
      "homology", "classify the homology of the underlying complex");
  add_common(c_homology, 1, 1);
  c_homology->add_flag("--json", json, "machine-readable output");

  CLI::App* c_hfi = app.add_subcommand(
      "hfi", "involutive homology: summands, Q-action, correction terms");
  add_common(c_hfi, 1, 1);
  c_hfi->add_flag("--json", json, "machine-readable output");

  CLI::App* c_dinv = app.add_subcommand(
      "dinv", "correction terms (d, d_lower, d_upper)");
  add_common(c_dinv, 1, -1);
  c_dinv->add_flag("--sum", sum, "tensor all inputs first");
  c_dinv->add_option("--copies", copies, "repeat the input list n times")
      ->check(CLI::PositiveNumber);
  c_dinv->add_flag("--json", json, "machine-readable output");

  CLI::App* c_tensor = app.add_subcommand(
      "tensor", "tensor the inputs and emit the product document");
  add_common(c_tensor, 1, -1);
  c_tensor->add_option("--copies", copies, "repeat the input list n times")
      ->check(CLI::PositiveNumber);

  CLI::App* c_dual = app.add_subcommand(
      "dual", "emit the orientation-reversed (dual) document");
  add_common(c_dual, 1, 1);

  CLI::App* c_localequiv = app.add_subcommand(
      "localequiv", "search local-equivalence witnesses in both directions");
  add_common(c_localequiv, 2, 2);
  c_localequiv->add_flag("--json", json, "machine-readable output");

  CLI::App* c_preset = app.add_subcommand("preset", "preset library");
  std::string preset_verb;
  c_preset->add_option("verb", preset_verb, "only: list")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  Emitter emit(out, out_path);

  if (app.got_subcommand(c_validate)) {
    std::string spec = inputs[0];
    Input in = load_input(spec, /*check_files=*/false);
    IotaReport rep = validate_iota(in.complex);
    std::string text = "input: " + in.label + "\ngenerators: " +
                       std::to_string(in.complex.complex.gens.size()) + "\n";
    if (rep.ok()) {
      text += "ok: differential squares to zero, iota is a degree-0 chain "
              "map, iota^2 ~ id (homotopy with " +
              std::to_string(rep.square_witness->entry_count()) +
              " entries), homology localizes to one tower\n";
      emit(text);
      return 0;
    }
    for (const auto& v : rep.all_violations()) text += "violation: " + v + "\n";
    emit(text);
    return 3;
  }

  if (app.got_subcommand(c_homology)) {
    Input in = load_input(inputs[0]);
    HomologyModule h = homology(in.complex.complex);
    if (json) {
      ResultDocument r;
      r.input = in.label;
      std::vector<Grading> towers;
      for (const auto& t : h.towers) towers.push_back(t.top);
      r.hfi_towers = std::move(towers);
      std::vector<TorsionPart> torsion;
      for (const auto& t : h.torsion) torsion.push_back({t.top, t.order});
      r.hfi_torsion = std::move(torsion);
      emit(serialize_result(r));
      return 0;
    }
    std::string text = "homology of " + in.label + ":\n  " + summand_list(h) +
                       "\n";
    if (!h.torsion.empty())
      text += "  torsion F2-dimensions by grading:  " + torsion_dim_table(h) +
              "\n";
    emit(text);
    return 0;
  }

  if (app.got_subcommand(c_hfi)) {
    Input in = load_input(inputs[0]);
    InvolutiveSummary s = correction_terms_cone(in.complex);
    if (json) {
      emit(serialize_result(result_of(in.label, s)));
      return 0;
    }
    std::string text = "involutive homology of " + in.label + ":\n";
    text += "  summands: " + summand_list(s.hfi) + "\n";
    std::string legend;
    for (int i = 0; i < s.hfi.summand_count(); ++i) {
      if (!legend.empty()) legend += ", ";
      legend += "s" + std::to_string(i) + " = " +
                summand_str(s.hfi.summand(i).top, s.hfi.summand(i).order);
    }
    text += "  labels:   " + legend + "\n";
    text += "  Q-action: " + q_action_table(s) + "\n";
    if (!s.hfi.torsion.empty())
      text += "  torsion F2-dimensions by grading:  " +
              torsion_dim_table(s.hfi) + "\n";
    text += "  " + dinv_line(s) + "\n";
    emit(text);
    return 0;
  }

  if (app.got_subcommand(c_dinv)) {
    std::vector<Input> loaded = load_all(inputs, copies);
    std::vector<std::pair<std::string, InvolutiveSummary>> results;
    if (sum) {
      Input t = tensor_all(loaded);
      results.emplace_back(t.label, correction_terms_cone(t.complex));
    } else {
      for (const auto& in : loaded)
        results.emplace_back(in.label, correction_terms_cone(in.complex));
    }
    if (json) {
      if (results.size() == 1) {
        emit(serialize_result(result_of(results[0].first, results[0].second)));
      } else {
        std::vector<ResultDocument> docs;
        for (const auto& [label, s] : results)
          docs.push_back(result_of(label, s));
        emit(serialize_results(docs));
      }
      return 0;
    }
    std::string text;
    for (const auto& [label, s] : results)
      text += label + ": " + dinv_line(s) + "\n";
    emit(text);
    return 0;
  }

  if (app.got_subcommand(c_tensor)) {
    std::vector<Input> loaded = load_all(inputs, copies);
    Input t = tensor_all(loaded);
    ComplexDocument doc{std::move(t.complex), t.label, std::nullopt};
    emit(serialize_complex(doc));
    return 0;
  }

  if (app.got_subcommand(c_dual)) {
    Input in = load_input(inputs[0]);
    ComplexDocument doc{dual(in.complex), "dual(" + in.label + ")",
                        std::nullopt};
    emit(serialize_complex(doc));
    return 0;
  }

  if (app.got_subcommand(c_localequiv)) {
    Input a = load_input(inputs[0]);
    Input b = load_input(inputs[1]);
    auto fwd = find_local_map(a.complex, b.complex);
    auto bwd = find_local_map(b.complex, a.complex);
    if (json) {
      ResultDocument r;
      r.input = a.label + " vs " + b.label;
      std::vector<LocalMapReport> maps;
      LocalMapReport mf{a.label, b.label, fwd.has_value(), {}, {}};
      if (fwd) {
        mf.f = map_entries(fwd->f);
        mf.h = map_entries(fwd->h);
      }
      LocalMapReport mb{b.label, a.label, bwd.has_value(), {}, {}};
      if (bwd) {
        mb.f = map_entries(bwd->f);
        mb.h = map_entries(bwd->h);
      }
      maps.push_back(std::move(mf));
      maps.push_back(std::move(mb));
      r.local_maps = std::move(maps);
      emit(serialize_result(r));
      return 0;
    }
    auto line = [](const Input& x, const Input& y,
                   const std::optional<LocalMapWitness>& w) {
      if (!w) return x.label + " -> " + y.label + ": no witness\n";
      return x.label + " -> " + y.label + ": witness found (f: " +
             std::to_string(w->f.entry_count()) + " entries, homotopy: " +
             std::to_string(w->h.entry_count()) + " entries)\n";
    };
    std::string text = line(a, b, fwd) + line(b, a, bwd);
    text += std::string("locally equivalent: ") +
            ((fwd && bwd) ? "yes" : "no") + "\n";
    emit(text);
    return 0;
  }

  if (app.got_subcommand(c_preset)) {
    if (preset_verb != "list")
      throw argument_error("unknown preset verb '" + preset_verb +
                           "' (only: list)");
    std::string text;
    for (const auto& name : preset_names()) {
      IotaComplex x = preset(name);
      InvolutiveSummary s = correction_terms_cone(x);
      text += name + ": " + std::to_string(x.complex.gens.size()) +
              " generators, " + dinv_line(s) + "\n";
    }
    text += "composites: join with '#', repeat with '^n' (e.g. "
            "\"sigma_2_3_7^2#unit\")\n";
    emit(text);
    return 0;
  }

  throw internal_error("unhandled subcommand");
}

}  // namespace

}  // namespace ihf
