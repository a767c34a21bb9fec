#include "ihf/iota.hpp"

namespace ihf {

IotaComplex::IotaComplex(GradedComplex c, MonoMatrix i)
    : complex(std::move(c)), iota(std::move(i)) {
  if (iota.rows() != complex.gens || iota.cols() != complex.gens)
    throw structural_error("iota must be square over the generators");
  if (iota.delta() != Grading(0))
    throw structural_error("iota must preserve the grading");
}

std::vector<std::string> IotaReport::all_violations() const {
  std::vector<std::string> out = chain.violations;
  out.insert(out.end(), violations.begin(), violations.end());
  return out;
}

IotaReport validate_iota(const IotaComplex& x) {
  IotaReport rep;
  rep.chain = validate(x.complex);
  if (!rep.chain.ok) return rep;

  const GradedComplex& c = x.complex;
  if (!is_chain_map(c, c, x.iota))
    rep.violations.push_back("iota does not commute with the differential");

  if (rep.violations.empty()) {
    MonoMatrix sq_plus_id =
        add(compose(x.iota, x.iota), MonoMatrix::identity(c.gens));
    auto h = null_homotopy(c, c, sq_plus_id);
    if (h)
      rep.square_witness = std::move(h);
    else
      rep.violations.push_back(
          "iota^2 is not chain homotopic to the identity");

    HomologyModule hm = homology(c);
    if (hm.towers.size() != 1)
      rep.violations.push_back(
          "localized homology is not a single free tower (found " +
          std::to_string(hm.towers.size()) + ")");
  }
  return rep;
}

namespace {

Basis tensor_basis(const Basis& a, const Basis& b) {
  Basis out;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < b.size(); ++j) {
      out.add(a.name(i) + "|" + b.name(j),
              a.grading(i) + b.grading(j) + Grading(2));
    }
  }
  return out;
}

}  // namespace

MonoMatrix tensor_map(const MonoMatrix& f, const MonoMatrix& g,
                      const Basis& product_basis) {
  const int nb = g.cols().size();
  MonoMatrix out(product_basis, product_basis, f.delta() + g.delta());
  for (int cf = 0; cf < f.cols().size(); ++cf) {
    for (int rf : f.column(cf)) {
      for (int cg = 0; cg < nb; ++cg) {
        for (int rg : g.column(cg)) {
          out.toggle(rf * nb + rg, cf * nb + cg);
        }
      }
    }
  }
  return out;
}

IotaComplex tensor(const IotaComplex& x, const IotaComplex& y) {
  const Basis& a = x.complex.gens;
  const Basis& b = y.complex.gens;
  Basis prod = tensor_basis(a, b);
  const int nb = b.size();

  MonoMatrix diff(prod, prod, Grading(1));
  // d(x|y) = dx|y + x|dy.
  for (int ca = 0; ca < a.size(); ++ca) {
    for (int cb = 0; cb < nb; ++cb) {
      int col = ca * nb + cb;
      for (int r : x.complex.diff.column(ca)) diff.toggle(r * nb + cb, col);
      for (int r : y.complex.diff.column(cb)) diff.toggle(ca * nb + r, col);
    }
  }
  MonoMatrix iota = tensor_map(x.iota, y.iota, prod);
  return IotaComplex(GradedComplex(std::move(prod), std::move(diff)),
                     std::move(iota));
}

IotaComplex dual(const IotaComplex& x) {
  const Basis& g = x.complex.gens;
  Basis dg;
  for (int i = 0; i < g.size(); ++i) {
    dg.add(g.name(i), -g.grading(i) - Grading(4));
  }
  MonoMatrix diff(dg, dg, Grading(1));
  for (const auto& e : x.complex.diff.entries()) diff.toggle(e.col, e.row);
  MonoMatrix iota(dg, dg, Grading(0));
  for (const auto& e : x.iota.entries()) iota.toggle(e.col, e.row);
  return IotaComplex(GradedComplex(std::move(dg), std::move(diff)),
                     std::move(iota));
}

MonoMatrix check_phi_correction(const IotaComplex& x, const IotaComplex& y) {
  IotaComplex prod = tensor(x, y);
  MonoMatrix fx = compose(phi(x.complex), x.iota);
  MonoMatrix fy = compose(phi(y.complex), y.iota);
  MonoMatrix f = tensor_map(fx, fy, prod.complex.gens).u_times(1);
  auto h = null_homotopy(prod.complex, prod.complex, f);
  if (!h)
    throw internal_error(
        "no homotopy kills U*(Phi iota (x) Phi iota) on the product; this "
        "contradicts the vanishing theorem");
  return *h;
}

}  // namespace ihf
