// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "gelfand/hc.hpp"
#include "gelfand/lattice.hpp"
#include "gelfand/orders.hpp"
#include "gelfand/repq.hpp"
#include "gelfand/verify.hpp"

using namespace gelfand;

namespace {

using DV = std::pair<std::size_t, std::size_t>;

struct Outcome {
  bool ok = false;
  std::string detail;
};

template <class F>
auto with_raise(int n, F f) -> decltype(f(n)) {
  for (;;) {
    try {
      return f(n);
    } catch (const RaiseTruncation&) {
      if (2 * n > kMaxTruncation) throw;
      n *= 2;
    }
  }
}

RepQObj coker_at(const NormalForm& nf, int n) {
  return with_raise(n, [&](int m) { return cokernel(build_normal_map(nf, m)); });
}

std::vector<Scalar> lambdas() { return {Scalar(1), Scalar(2), Scalar::rational(1, 2), Scalar(-1)}; }

// Dimension vectors (dim U, dim V) copied by hand from the classification table.
DV table_dims(const NormalForm& nf) {
  std::size_t k = nf.k, l = nf.l;
  switch (nf.kase) {
    case NfCase::Ia: return {k, k};
    case NfCase::Ib: return {k - 1, k};
    case NfCase::IIa: return {2 * k + l + 1, 2 * k + l};
    case NfCase::IIb: return {2 * k + l - 1, 2 * k + l};
    case NfCase::IIci:
    case NfCase::IIcii:
    case NfCase::IId: return {2 * k + l, 2 * k + l};
  }
  return {0, 0};
}

std::string dv(const DV& d) { return "(" + std::to_string(d.first) + "," + std::to_string(d.second) + ")"; }

Outcome schurian() {
  auto six = schurian_modules();
  const std::size_t dims[6] = {2, 1, 1, 1, 2, 2};
  for (std::size_t i = 0; i < six.size(); ++i) {
    const RepQObj& m = six[i].obj;
    DivisionVerdict d = is_schurian(m);
    FinDimAlgebra e = end_algebra(m);
    if (d.division != Tri::yes) return {false, six[i].name + " is not Schurian: " + d.reason};
    if (e.dim() != dims[i]) return {false, six[i].name + " has End of dim " + std::to_string(e.dim())};
    if (dims[i] == 2) {
      if (!d.imaginary_unit) return {false, six[i].name + ": no j witness"};
      const Vec& j = *d.imaginary_unit;
      if (!(e.mul(j, j) == scale(Scalar(-1), e.unit()))) return {false, six[i].name + ": j^2 != -1"};
    }
  }
  int non_iso = 0;
  for (std::size_t i = 0; i < six.size(); ++i)
    for (std::size_t j = i + 1; j < six.size(); ++j) {
      IsoResult r = is_isomorphic(six[i].obj, six[j].obj);
      if (!r.isomorphic && !r.reason.empty()) ++non_iso;
    }
  return {non_iso == 15, std::to_string(non_iso) + "/15 pairs non-isomorphic, End dims (2,1,1,1,2,2)"};
}

Outcome exhaustive() {
  const std::set<DV> allowed{{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  std::size_t checked = 0;
  for (const auto& nf : enumerate_normal_forms(3, lambdas())) {
    RepQObj m = coker_at(nf, 8);
    if (allowed.count(m.dimension_vector())) continue;
    ++checked;
    FinDimAlgebra e = end_algebra(m);
    if (is_division(e).division != Tri::no) return {false, nf.str() + " not rejected"};
    if (radical(e).dim() == 0) return {false, nf.str() + " has no End radical witness"};
  }
  return {checked > 0, std::to_string(checked) + " cokernels rejected with End radical witnesses"};
}

Outcome dimension_formulas() {
  auto forms = enumerate_normal_forms(3, lambdas());
  for (const auto& nf : forms) {
    DV got = coker_at(nf, 16).dimension_vector();
    if (got != table_dims(nf)) return {false, nf.str() + ": " + dv(got) + " vs " + dv(table_dims(nf))};
  }
  return {true, std::to_string(forms.size()) + " normal forms at N = 16"};
}

Outcome round_trip() {
  auto forms = enumerate_normal_forms(3, lambdas());
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    NormalForm nf = forms[rng() % forms.size()];
    bool ok = with_raise(8, [&](int n) {
      LatticeMap f = perturbed_normal_map(nf, n, rng);
      Reduction r;
      try {
        r = reduce_to_normal_form(f);
      } catch (const NotRationalIso& e) {
        throw RaiseTruncation(e.what());
      }
      return r.nf == nf.canonical() && verify_reduction(f, r).ok;
    });
    if (!ok) return {false, "trial " + std::to_string(trial) + " (" + nf.str() + ")"};
  }
  return {true, "200 perturbations"};
}

Outcome lambda_law() {
  auto coker = [](int l, Scalar lam) { return coker_at({NfCase::IId, 1, l, lam}, 8); };
  IsoResult a = is_isomorphic(coker(0, Scalar(2)), coker(0, Scalar::rational(1, 2)));
  if (!a.isomorphic || !a.iso || !check_morphism(*a.iso).ok || !is_invertible(*a.iso))
    return {false, "no certified iso for 2 vs 1/2"};
  if (is_isomorphic(coker(0, Scalar(2)), coker(0, Scalar(3))).isomorphic) return {false, "2 ~ 3"};
  if (is_isomorphic(coker(1, Scalar(1)), coker(1, Scalar(2))).isomorphic) return {false, "l = 1: 1 ~ 2"};
  return {true, "2 ~ 1/2 certified; 2 vs 3 and (l = 1) 1 vs 2 distinct"};
}

Outcome pseudo_diag() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  int irrational = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Scalar c = Scalar::rational(num(rng), den(rng));
    Scalar d = Scalar::rational(num(rng), den(rng));
    if (d.is_zero()) d = Scalar(-1);
    PseudoDiag p = pseudo_diagonalize(c, d);
    Scalar pi = p.lambda * p.lambda - (d * d + c * c + Scalar(1)) / d * p.lambda + Scalar(1);
    Mat m(2, 2), want(2, 2);
    m(0, 0) = Scalar(1);
    m(1, 0) = c;
    m(1, 1) = d;
    want(0, 0) = Scalar(1);
    want(1, 1) = p.lambda;
    if (!pi.is_zero() || !(p.eta * m * p.xi == want)) return {false, "c = " + c.str() + ", d = " + d.str()};
    if (!p.lambda.is_rational()) ++irrational;
  }
  return {true, "50 pairs, " + std::to_string(irrational) + " with irrational lambda"};
}

Outcome algebra_maps() {
  std::vector<std::pair<std::string, std::function<MapCheck()>>> maps{
      {"Lambda->A/tA", lambda_to_a_mod_t},
      {"O^G->A N=2", [] { return og_to_a_check(2); }},
      {"O^G->A N=3", [] { return og_to_a_check(3); }},
      {"O^G->A N=4", [] { return og_to_a_check(4); }},
      {"C[Gal]->M_2", galois_to_matrix_check},
      {"C(x)A->O N=2", [] { return complexification_check(2); }},
      {"C(x)A->O N=3", [] { return complexification_check(3); }},
  };
  for (auto& [name, f] : maps) {
    auto t0 = std::chrono::steady_clock::now();
    MapCheck m = f();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!m.verdict.ok) return {false, name + ": " + m.verdict.message};
    if (s >= 10) return {false, name + " took " + std::to_string(s) + " s"};
  }
  IdempotentCheck i = idempotent_conjugacy_check(1);
  if (!i.verdict.ok) return {false, "idempotents: " + i.verdict.message};
  return {true, "7 algebra maps and idempotent conjugacy"};
}

Outcome radicals() {
  const int n = 4;
  FinDimAlgebra a = truncated_order("A", n);
  Subspace<Scalar> r = radical(a);
  FinDimAlgebra q = quotient(a, r);
  auto project = [&](const Vec& v) {
    Vec red = r.reduce(v), o;
    for (auto f : r.free_columns()) o.push_back(red[f]);
    return o;
  };
  const GradedOrder& ord = order_A();
  Vec j = project(a.basis_vector(ord.generator_index("j")));
  Vec e = project(a.basis_vector(ord.generator_index("e")));
  // j lives in the C factor, whose unit is the image of e
  bool jj = q.mul(j, j) == scale(Scalar(-1), e) && q.mul(e, j) == j;
  FinDimAlgebra h = truncated_order("H", n);
  std::size_t hq = quotient(h, radical(h)).dim();
  return {q.dim() == 3 && jj && hq == 5,
          "dim A/J = " + std::to_string(q.dim()) + (jj ? ", j^2 = -e" : ", no j") + ", dim H/J = " + std::to_string(hq)};
}

Outcome duality() {
  auto involutive = [](const RepQObj& m) {
    RepQObj d = dual(m);
    return validate(d).ok && d.dimension_vector() == m.dimension_vector() && is_isomorphic(dual(d), m).isomorphic;
  };
  auto six = schurian_modules();
  for (const auto& x : six)
    if (!involutive(x.obj)) return {false, x.name};
  auto forms = enumerate_normal_forms(3, lambdas());
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    NormalForm nf = forms[rng() % forms.size()];
    if (!involutive(coker_at(nf, 8))) return {false, "coker " + nf.str()};
  }
  RepQObj b1, b2;
  for (const auto& x : six) {
    if (x.name == "b1") b1 = x.obj;
    if (x.name == "b2") b2 = x.obj;
  }
  if (!is_isomorphic(dual(b1), b2).isomorphic || !is_isomorphic(dual(b2), b1).isomorphic)
    return {false, "b1 and b2 not exchanged"};
  return {true, "6 Schurian + 20 cokernels; b1 <-> b2"};
}

Outcome hc_bridge() {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    HCDiagram d = random_hc_diagram(rng, i % 2 == 1);
    Verdict v = with_raise(8, [&](int n) { return conjugation_square_check(d, n); });
    if (!v) return {false, "square, diagram " + std::to_string(i) + ": " + v.message};
    if (!casimir_agree(d)) return {false, "Casimir, diagram " + std::to_string(i)};
  }
  for (const auto& nf : enumerate_normal_forms(2, {Scalar(1), Scalar(2)})) {
    bool case_one = nf.kase == NfCase::Ia || nf.kase == NfCase::Ib;
    DV t = top(coker_at(nf, 8));
    if (t != (case_one ? DV{0, 1} : DV{1, 0})) return {false, nf.str() + " top " + dv(t)};
  }
  for (const auto& x : schurian_modules())
    if (x.name == "c1" && top(x.obj) != DV{0, 2}) return {false, "c1 top " + dv(top(x.obj))};
  return {true, "100 diagrams; tops T / S; c1 top T+T"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    Outcome (*run)();
  };
  const Criterion all[] = {
      {"Schurian classification", 1, schurian},
      {"exhaustiveness spot-check", 30, exhaustive},
      {"dimension-vector formulas", 120, dimension_formulas},
      {"reduction round-trip", 300, round_trip},
      {"lambda isomorphism law", 30, lambda_law},
      {"pseudo-diagonalization", 10, pseudo_diag},
      {"algebra isomorphisms", 70, algebra_maps},
      {"radical structure", 5, radicals},
      {"duality", 30, duality},
      {"HC bridge", 60, hc_bridge},
  };
  int failed = 0, idx = 0;
  for (const auto& c : all) {
    ++idx;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && s >= c.budget_s) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
    }
    if (!o.ok) ++failed;
    std::printf("%s  %2d %-28s %7.2f s  %s\n", o.ok ? "PASS" : "FAIL", idx, c.name, s, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/10 criteria pass\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
