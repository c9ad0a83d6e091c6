#include "gelfand/verify.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "gelfand/orders.hpp"

namespace gelfand {

namespace {

using DV = std::pair<std::size_t, std::size_t>;

std::string dv_str(const DV& d) { return "(" + std::to_string(d.first) + "," + std::to_string(d.second) + ")"; }

// Calls f(n), doubling n on RaiseTruncation up to kMaxTruncation.
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

// Runs body, turning exceptions into a failed or exhausted check.
void run_check(std::vector<CheckResult>& out, std::string id, std::string claim,
               const std::function<void(CheckResult&)>& body) {
  CheckResult c;
  c.id = std::move(id);
  c.claim = std::move(claim);
  try {
    body(c);
  } catch (const RaiseTruncation& e) {
    c.pass = false;
    c.exhausted = true;
    c.detail = std::string("truncation exhausted at N = ") + std::to_string(kMaxTruncation) + ": " + e.what();
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("error: ") + e.what();
  }
  out.push_back(std::move(c));
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t salt) { return seed * 0x9e3779b97f4a7c15ULL + salt; }

std::vector<Scalar> lambda_set() { return {Scalar(1), Scalar(2), Scalar::rational(1, 2), Scalar(-1)}; }

RepQObj coker_of(const NormalForm& nf, int n_trunc) {
  return with_raise(n_trunc, [&](int n) { return cokernel(build_normal_map(nf, n)); });
}

// ---------------------------------------------------------------- schurian

void schurian_suite(std::vector<CheckResult>& out) {
  auto six = schurian_modules();
  const std::size_t dims[6] = {2, 1, 1, 1, 2, 2};
  for (std::size_t i = 0; i < six.size(); ++i) {
    const auto& [name, m] = six[i];
    std::string claim = "End(" + name + ") is a division algebra of dimension " + std::to_string(dims[i]) +
                        (dims[i] == 2 ? ", isomorphic to C" : ", isomorphic to R");
    run_check(out, "schurian." + name, claim, [&, i](CheckResult& c) {
      FinDimAlgebra e = end_algebra(m);
      DivisionVerdict d = is_schurian(m);
      c.pass = d.division == Tri::yes && e.dim() == dims[i] && d.real_type == (dims[i] == 2 ? "C" : "R");
      c.witness = {{"module", to_json(m)}, {"end_dim", e.dim()}, {"type", d.real_type}};
      if (dims[i] == 2) {
        c.pass = c.pass && d.imaginary_unit.has_value();
        if (d.imaginary_unit) {
          const Vec& j = *d.imaginary_unit;
          bool sq = e.mul(j, j) == scale(Scalar(-1), e.unit());
          c.pass = c.pass && sq;
          json jj = json::array();
          for (const auto& x : j) jj.push_back(x.str());
          c.witness["j"] = jj;
        }
      }
      c.detail = "End dim " + std::to_string(e.dim()) + ", type " + (d.real_type.empty() ? "-" : d.real_type) +
                 (d.division == Tri::yes ? "" : ", " + d.reason);
    });
  }
  run_check(out, "schurian.noniso", "the six Schurian objects are pairwise non-isomorphic (15 pairs)",
            [&](CheckResult& c) {
              int non_iso = 0;
              json w = json::array();
              for (std::size_t i = 0; i < six.size(); ++i)
                for (std::size_t j = i + 1; j < six.size(); ++j) {
                  IsoResult r = is_isomorphic(six[i].obj, six[j].obj);
                  if (!r.isomorphic) ++non_iso;
                  w.push_back({{"pair", {six[i].name, six[j].name}}, {"isomorphic", r.isomorphic}, {"reason", r.reason}});
                }
              c.pass = non_iso == 15;
              c.detail = std::to_string(non_iso) + "/15 non-isomorphic";
              c.witness = w;
            });
  run_check(out, "schurian.duality",
            "duality preserves dimension vectors, is an involution and exchanges b1 with b2 and c1 with c2",
            [&](CheckResult& c) {
              bool ok = true;
              for (const auto& [name, m] : six) {
                RepQObj d = dual(m);
                ok = ok && validate(d) && d.dimension_vector() == m.dimension_vector() &&
                     is_isomorphic(dual(d), m).isomorphic;
              }
              auto find = [&](const std::string& n) {
                for (const auto& x : six)
                  if (x.name == n) return x.obj;
                throw Error("missing " + n);
              };
              IsoResult b = is_isomorphic(dual(find("b1")), find("b2"));
              IsoResult cc = is_isomorphic(dual(find("c1")), find("c2"));
              ok = ok && b.isomorphic && cc.isomorphic;
              c.pass = ok;
              if (b.iso) c.witness["b1*->b2"] = to_json(*b.iso);
              if (cc.iso) c.witness["c1*->c2"] = to_json(*cc.iso);
              c.detail = ok ? "ok" : "duality property failed";
            });
}

// --------------------------------------------------------------- abscyclic

void abscyclic_suite(std::vector<CheckResult>& out, int n_trunc, std::uint64_t seed) {
  std::vector<NormalForm> forms = enumerate_normal_forms(3, lambda_set());
  std::vector<RepQObj> cokers(forms.size());
  std::vector<std::string> errs(forms.size());
  std::vector<char> exhausted(forms.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < forms.size(); ++i) {
    try {
      cokers[i] = coker_of(forms[i], n_trunc);
    } catch (const RaiseTruncation& e) {
      exhausted[i] = 1;
      errs[i] = e.what();
    } catch (const std::exception& e) {
      errs[i] = e.what();
    }
  }
  auto first_problem = [&](CheckResult& c) {
    for (std::size_t i = 0; i < forms.size(); ++i)
      if (!errs[i].empty()) {
        c.pass = false;
        c.exhausted = exhausted[i] != 0;
        c.detail = forms[i].str() + ": " + errs[i];
        return true;
      }
    return false;
  };

  run_check(out, "abscyclic.dimvec",
            "coker of every normal form with k, l <= 3 has the predicted dimension vector", [&](CheckResult& c) {
              if (first_problem(c)) return;
              c.pass = true;
              c.witness = json::array();
              for (std::size_t i = 0; i < forms.size(); ++i) {
                DV got = cokers[i].dimension_vector(), want = dimension_vector_formula(forms[i]);
                c.witness.push_back({{"form", to_json(forms[i])}, {"dims", {got.first, got.second}}});
                if (got != want && c.pass) {
                  c.pass = false;
                  c.detail = forms[i].str() + ": got " + dv_str(got) + ", expected " + dv_str(want);
                }
              }
              if (c.pass) c.detail = std::to_string(forms.size()) + " normal forms";
            });

  run_check(out, "abscyclic.exhaustive",
            "cokernels with dimension vector outside {(1,0),(0,1),(1,1),(1,2)} are not Schurian",
            [&](CheckResult& c) {
              if (first_problem(c)) return;
              const std::set<DV> allowed{{1, 0}, {0, 1}, {1, 1}, {1, 2}};
              std::vector<int> verdict(forms.size(), 0);  // 0 skipped, 1 ok, 2 bad
              std::vector<std::size_t> rad(forms.size(), 0);
#pragma omp parallel for schedule(dynamic)
              for (std::size_t i = 0; i < forms.size(); ++i) {
                if (allowed.count(cokers[i].dimension_vector())) continue;
                FinDimAlgebra e = end_algebra(cokers[i]);
                rad[i] = radical(e).dim();
                verdict[i] = is_division(e).division == Tri::no && rad[i] > 0 ? 1 : 2;
              }
              c.pass = true;
              c.witness = json::array();
              std::size_t checked = 0;
              for (std::size_t i = 0; i < forms.size(); ++i) {
                if (verdict[i] == 0) continue;
                ++checked;
                c.witness.push_back({{"form", forms[i].str()}, {"end_radical_dim", rad[i]}});
                if (verdict[i] == 2 && c.pass) {
                  c.pass = false;
                  c.detail = forms[i].str() + " has no End radical witness";
                }
              }
              if (c.pass) c.detail = std::to_string(checked) + " cokernels with End radical";
            });

  run_check(out, "abscyclic.roundtrip",
            "perturbed normal forms reduce back to the same normal form with exact certificates",
            [&](CheckResult& c) {
              std::mt19937_64 rng(sub_seed(seed, 1));
              c.pass = true;
              c.witness = json::array();
              for (int trial = 0; trial < 50; ++trial) {
                NormalForm nf = forms[rng() % forms.size()];
                bool ok = with_raise(n_trunc, [&](int n) {
                  LatticeMap f = perturbed_normal_map(nf, n, rng);
                  Reduction r;
                  try {
                    r = reduce_to_normal_form(f);
                  } catch (const NotRationalIso& e) {
                    // the input is a rational isomorphism; its determinant only looks zero mod t^N
                    throw RaiseTruncation(e.what());
                  }
                  bool same = r.nf == nf.canonical() && verify_reduction(f, r).ok;
                  c.witness.push_back({{"input", to_json(f)}, {"normal_form", to_json(r.nf)}, {"eta", to_json(r.eta)},
                                       {"xi", to_json(r.xi)}});
                  return same;
                });
                if (!ok && c.pass) {
                  c.pass = false;
                  c.detail = "trial " + std::to_string(trial) + " (" + nf.str() + ") did not round-trip";
                }
              }
              if (c.pass) c.detail = "50 seeded perturbations";
            });

  run_check(out, "abscyclic.pseudodiag",
            "pseudo-diagonalization returns a root lambda with eta (1 0; c d) xi = diag(1, lambda)",
            [&](CheckResult& c) {
              std::mt19937_64 rng(sub_seed(seed, 2));
              std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
              c.pass = true;
              c.witness = json::array();
              for (int trial = 0; trial < 50; ++trial) {
                Scalar cc = Scalar::rational(num(rng), den(rng));
                Scalar dd = Scalar::rational(num(rng), den(rng));
                if (dd.is_zero()) dd = Scalar(1);
                PseudoDiag p = pseudo_diagonalize(cc, dd);
                Scalar s = (Scalar(1) + cc * cc + dd * dd) / dd;
                bool root = (p.lambda * p.lambda - s * p.lambda + Scalar(1)).is_zero();
                Mat m(2, 2), target(2, 2);
                m(0, 0) = Scalar(1);
                m(1, 0) = cc;
                m(1, 1) = dd;
                target(0, 0) = Scalar(1);
                target(1, 1) = p.lambda;
                bool diag = p.eta * m * p.xi == target;
                c.witness.push_back({{"c", cc.str()}, {"d", dd.str()}, {"lambda", p.lambda.str()}});
                if (!(root && diag) && c.pass) {
                  c.pass = false;
                  c.detail = "failed at c = " + cc.str() + ", d = " + dd.str();
                }
              }
              if (c.pass) c.detail = "50 seeded pairs";
            });

  run_check(out, "abscyclic.lambda",
            "coker(lambda = 2) ~ coker(lambda = 1/2) with an explicit isomorphism; 2 vs 3 and, for l = 1, 1 vs 2 differ",
            [&](CheckResult& c) {
              auto coker = [&](int l, Scalar lam) { return coker_of({NfCase::IId, 1, l, lam}, n_trunc); };
              IsoResult a = is_isomorphic(coker(0, Scalar(2)), coker(0, Scalar::rational(1, 2)));
              bool cert = a.isomorphic && a.iso && check_morphism(*a.iso).ok && is_invertible(*a.iso);
              bool b = !is_isomorphic(coker(0, Scalar(2)), coker(0, Scalar(3))).isomorphic;
              bool d = !is_isomorphic(coker(1, Scalar(1)), coker(1, Scalar(2))).isomorphic;
              c.pass = cert && b && d;
              if (a.iso) c.witness["iso_2_to_1/2"] = to_json(*a.iso);
              c.detail = std::string(cert ? "iso certified" : "no certificate") + (b ? "" : ", 2 ~ 3") + (d ? "" : ", l=1 collapse");
            });
}

// ----------------------------------------------------------------- algebra

void algebra_suite(std::vector<CheckResult>& out, int n_trunc) {
  auto map_check = [&](const std::string& id, const std::string& claim, const std::function<MapCheck()>& f) {
    run_check(out, id, claim, [&](CheckResult& c) {
      MapCheck m = f();
      c.pass = m.verdict.ok;
      c.detail = m.verdict.ok ? "dim " + std::to_string(m.source.dim()) : m.verdict.message;
    });
  };
  map_check("algebra.lambda", "Lambda -> A/tA is an algebra isomorphism", lambda_to_a_mod_t);
  for (int n = 2; n <= std::min(n_trunc, 4); ++n)
    map_check("algebra.og.N" + std::to_string(n), "O^G -> A is an isomorphism mod t^" + std::to_string(n),
              [n] { return og_to_a_check(n); });
  map_check("algebra.galois", "C[Gal(C/R)] with the conjugation twist is M_2(R)", galois_to_matrix_check);
  for (int n = 2; n <= std::min(n_trunc, 3); ++n)
    map_check("algebra.complexification.N" + std::to_string(n),
              "C (x) A -> O is an isomorphism mod t^" + std::to_string(n), [n] { return complexification_check(n); });
  run_check(out, "algebra.idempotents", "e*+ and e*- are conjugate orthogonal idempotents of O[G]",
            [&](CheckResult& c) {
              IdempotentCheck i = idempotent_conjugacy_check(1);
              c.pass = i.verdict.ok;
              c.detail = i.verdict.ok ? "crossed dim " + std::to_string(i.crossed_dim) + ", corner dim " +
                                            std::to_string(i.corner_dim)
                                      : i.verdict.message;
            });
  run_check(out, "algebra.group", "Q[G] with trivial action splits by (1 +- [s])/2", [&](CheckResult& c) {
    Verdict v = group_algebra_check();
    c.pass = v.ok;
    c.detail = v.ok ? "ok" : v.message;
  });
  int nr = std::min(n_trunc, 4);
  run_check(out, "algebra.radical",
            "A/J has dimension 3 with a j satisfying j^2 = -e; H/J has dimension 5 (mod t^" + std::to_string(nr) + ")",
            [&](CheckResult& c) {
              FinDimAlgebra a = truncated_order("A", nr);
              Subspace<Scalar> r = radical(a);
              FinDimAlgebra q = quotient(a, r);
              std::vector<std::size_t> free = r.free_columns();
              auto project = [&](const Vec& v) {
                Vec red = r.reduce(v);
                Vec o;
                for (auto f : free) o.push_back(red[f]);
                return o;
              };
              const GradedOrder& ord = order_A();
              Vec j = project(a.basis_vector(ord.generator_index("j")));
              Vec e = project(a.basis_vector(ord.generator_index("e")));
              bool jj = q.mul(j, j) == scale(Scalar(-1), e);
              FinDimAlgebra h = truncated_order("H", nr);
              std::size_t hq = quotient(h, radical(h)).dim();
              c.pass = q.dim() == 3 && jj && hq == 5;
              c.detail = "dim A/J = " + std::to_string(q.dim()) + ", j^2 = -e: " + (jj ? "yes" : "no") +
                         ", dim H/J = " + std::to_string(hq);
            });
}

// ---------------------------------------------------------------------- hc

HCDiagram adjoint_diagram() {
  HCDiagram d;
  d.n_min = -2;
  d.n_max = 2;
  d.dims = {1, 1, 1};
  CMat one(1, 1, Complex(1)), two(1, 1, Complex(2));
  d.y[2] = one;
  d.y[0] = one;
  d.x[0] = two;
  d.x[-2] = two;
  return d;
}

void hc_suite(std::vector<CheckResult>& out, int n_trunc, std::uint64_t seed) {
  std::mt19937_64 rng(sub_seed(seed, 3));
  std::vector<HCDiagram> diagrams;
  for (int i = 0; i < 100; ++i) diagrams.push_back(random_hc_diagram(rng, i % 2 == 1));
  run_check(out, "hc.square",
            "restriction commutes with conjugation and the O-modules agree under the involution twist",
            [&](CheckResult& c) {
              std::vector<std::string> err(diagrams.size());
#pragma omp parallel for schedule(dynamic)
              for (std::size_t i = 0; i < diagrams.size(); ++i) {
                try {
                  Verdict v = with_raise(n_trunc, [&](int n) { return conjugation_square_check(diagrams[i], n); });
                  if (!v) err[i] = v.message;
                } catch (const std::exception& e) {
                  err[i] = e.what();
                }
              }
              c.pass = true;
              for (std::size_t i = 0; i < err.size(); ++i)
                if (!err[i].empty()) {
                  c.pass = false;
                  c.detail = "diagram " + std::to_string(i) + ": " + err[i];
                  break;
                }
              if (c.pass) c.detail = "100 seeded diagrams (50 real, 50 over Q(i))";
            });
  run_check(out, "hc.casimir", "both Casimir expressions have the same nilpotency on every component",
            [&](CheckResult& c) {
              std::vector<HCDiagram> all = diagrams;
              all.push_back(adjoint_diagram());
              std::size_t agree = 0;
              for (const auto& d : all) agree += casimir_agree(d) ? 1 : 0;
              bool adj_rejected = !validate_hc(adjoint_diagram()).ok;
              c.pass = agree == all.size() && adj_rejected;
              c.detail = std::to_string(agree) + "/" + std::to_string(all.size()) + " agree" +
                         (adj_rejected ? "" : ", adjoint module accepted");
            });
  run_check(out, "hc.tops", "case I cokernels have top T, case II cokernels have top S, and (c1) has top T+T",
            [&](CheckResult& c) {
              c.pass = true;
              json w = json::array();
              for (const auto& nf : enumerate_normal_forms(2, {Scalar(1), Scalar(2)})) {
                bool one = nf.kase == NfCase::Ia || nf.kase == NfCase::Ib;
                DV t = top(coker_of(nf, n_trunc));
                w.push_back({{"form", nf.str()}, {"top", {t.first, t.second}}});
                if (t != (one ? DV{0, 1} : DV{1, 0}) && c.pass) {
                  c.pass = false;
                  c.detail = nf.str() + " has top " + dv_str(t);
                }
              }
              RepQObj c1;
              for (const auto& m : schurian_modules())
                if (m.name == "c1") c1 = m.obj;
              DV t1 = top(c1);
              if (t1 != DV{0, 2} && c.pass) {
                c.pass = false;
                c.detail = "(c1) has top " + dv_str(t1);
              }
              c.witness = w;
              if (c.pass) c.detail = "ok";
            });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n{"schurian", "abscyclic", "algebra", "hc"};
  return n;
}

VerificationReport run_suite(const std::string& suite, int n_trunc, std::uint64_t seed) {
  if (n_trunc < 1) throw Error("N must be positive");
  VerificationReport r;
  r.suite = suite;
  r.n_trunc = n_trunc;
  r.seed = seed;
  auto one = [&](const std::string& s) {
    if (s == "schurian")
      schurian_suite(r.checks);
    else if (s == "abscyclic")
      abscyclic_suite(r.checks, n_trunc, seed);
    else if (s == "algebra")
      algebra_suite(r.checks, n_trunc);
    else if (s == "hc")
      hc_suite(r.checks, n_trunc, seed);
    else
      throw Error("unknown suite '" + s + "'");
  };
  if (suite == "all")
    for (const auto& s : suite_names()) one(s);
  else
    one(suite);
  return r;
}

bool VerificationReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool VerificationReport::exhausted() const {
  for (const auto& c : checks)
    if (c.exhausted) return true;
  return false;
}

int VerificationReport::exit_code() const {
  if (pass()) return 0;
  for (const auto& c : checks)
    if (!c.pass && !c.exhausted) return 2;
  return 3;
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  os << "suite: " << suite << "\n";
  os << "N: " << n_trunc << "\n";
  os << "seed: " << seed << "\n";
  std::size_t passed = 0;
  for (const auto& c : checks) {
    const char* status = c.pass ? "PASS" : c.exhausted ? "RAISE-N" : "FAIL";
    os << status << "  " << c.id << "  " << c.claim << "\n";
    os << "      " << c.detail;
    if (!c.witness_path.empty()) os << "  [" << c.witness_path << "]";
    os << "\n";
    if (c.pass) ++passed;
  }
  os << "overall: " << (pass() ? "PASS" : "FAIL") << " (" << passed << "/" << checks.size() << ")\n";
  return os.str();
}

json VerificationReport::to_json() const {
  json checks_j = json::array();
  for (const auto& c : checks) {
    json j{{"id", c.id},
           {"claim", c.claim},
           {"status", c.pass ? "pass" : c.exhausted ? "raise-n" : "fail"},
           {"detail", c.detail}};
    j["witness"] = c.witness_path.empty() ? json(nullptr) : json(c.witness_path);
    checks_j.push_back(j);
  }
  return json{{"suite", suite}, {"N", n_trunc}, {"seed", seed}, {"pass", pass()}, {"checks", checks_j}};
}

void write_report(VerificationReport& r, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  for (auto& c : r.checks) {
    if (c.witness.is_null()) continue;
    std::string name = c.id + ".json";
    write_json_file((fs::path(dir) / name).string(), c.witness);
    c.witness_path = name;
  }
  std::ofstream((fs::path(dir) / "report.txt").string()) << r.text();
  write_json_file((fs::path(dir) / "report.json").string(), r.to_json());
}

}  // namespace gelfand
