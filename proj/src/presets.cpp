#include "ihf/presets.hpp"

#include <charconv>
#include <map>

namespace ihf {

namespace {

IotaComplex make_one_generator(const std::string& name, const Grading& gr) {
  Basis b;
  b.add(name, gr);
  MonoMatrix diff(b, b, Grading(1));
  MonoMatrix iota = MonoMatrix::identity(b);
  return IotaComplex(GradedComplex(std::move(b), std::move(diff)),
                     std::move(iota));
}

IotaComplex make_sigma_2_3_7() {
  Basis b;
  b.add("a", Grading(-2));
  b.add("b", Grading(-2));
  b.add("c", Grading(-3));
  MonoMatrix diff(b, b, Grading(1));
  diff.toggle(0, 2);  // dc = U(a+b)
  diff.toggle(1, 2);
  MonoMatrix iota(b, b, Grading(0));
  iota.toggle(1, 0);  // a <-> b
  iota.toggle(0, 1);
  iota.toggle(2, 2);
  return IotaComplex(GradedComplex(std::move(b), std::move(diff)),
                     std::move(iota));
}

IotaComplex make_surg_m3_T27() {
  Basis b;
  b.add("a", Grading(-5, 2));
  b.add("d", Grading(-11, 2));
  b.add("g", Grading(-5, 2));
  MonoMatrix diff(b, b, Grading(1));
  diff.toggle(0, 1);  // dd = U^2(a+g)
  diff.toggle(2, 1);
  MonoMatrix iota(b, b, Grading(0));
  iota.toggle(2, 0);  // a <-> g
  iota.toggle(0, 2);
  iota.toggle(1, 1);
  return IotaComplex(GradedComplex(std::move(b), std::move(diff)),
                     std::move(iota));
}

IotaComplex make_surg_5_mT211() {
  Basis b;
  b.add("o", Grading(-1));
  b.add("t", Grading(4));
  b.add("y", Grading(-1));
  MonoMatrix diff(b, b, Grading(1));
  diff.toggle(1, 0);  // do = U^3 t
  diff.toggle(1, 2);  // dy = U^3 t
  MonoMatrix iota(b, b, Grading(0));
  iota.toggle(2, 0);  // o <-> y
  iota.toggle(0, 2);
  iota.toggle(1, 1);
  return IotaComplex(GradedComplex(std::move(b), std::move(diff)),
                     std::move(iota));
}

const IotaComplex& base_preset(const std::string& name) {
  static const std::map<std::string, IotaComplex> table = [] {
    std::map<std::string, IotaComplex> t;
    t.emplace("unit", make_one_generator("e", Grading(-2)));
    t.emplace("sigma_2_3_7", make_sigma_2_3_7());
    t.emplace("surg_m3_T27", make_surg_m3_T27());
    t.emplace("surg_5_mT211", make_surg_5_mT211());
    t.emplace("minus_L31", make_one_generator("a", Grading(-5, 2)));
    for (const auto& [name, x] : t) {
      if (!validate_iota(x).ok())
        throw internal_error("built-in preset '" + name + "' is invalid");
    }
    return t;
  }();
  auto it = table.find(name);
  if (it == table.end())
    throw argument_error("unknown preset '" + name +
                         "' (see `preset list` for the library)");
  return it->second;
}

}  // namespace

IotaComplex preset(const std::string& name) {
  std::vector<IotaComplex> factors;
  size_t pos = 0;
  while (true) {
    size_t hash = name.find('#', pos);
    std::string term =
        name.substr(pos, hash == std::string::npos ? hash : hash - pos);
    long long power = 1;
    if (size_t caret = term.find('^'); caret != std::string::npos) {
      std::string digits = term.substr(caret + 1);
      const char* b = digits.data();
      const char* e = b + digits.size();
      auto [p, ec] = std::from_chars(b, e, power);
      if (ec != std::errc() || p != e || power < 1)
        throw argument_error("bad preset power '" + term +
                             "' (want name^n with n >= 1)");
      term = term.substr(0, caret);
    }
    const IotaComplex& base = base_preset(term);
    for (long long i = 0; i < power; ++i) factors.push_back(base);
    if (hash == std::string::npos) break;
    pos = hash + 1;
  }
  IotaComplex out = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
  return out;
}

std::vector<std::string> preset_names() {
  return {"unit", "sigma_2_3_7", "surg_m3_T27", "surg_5_mT211", "minus_L31"};
}

}  // namespace ihf
