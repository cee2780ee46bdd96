#include "centstab/verify.hpp"

#include <functional>
#include <sstream>

#include "centstab/errors.hpp"
#include "centstab/specht.hpp"
#include "centstab/stability.hpp"

namespace centstab {

namespace {

struct CaseSpec {
  std::string id;
  std::string statement;
  int semisimple_n = 0;  // smallest n the field must be semisimple for
  std::function<bool(VerifyCase&)> run;
};

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed * 2654435761ULL + 1) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int below(int n) { return static_cast<int>(next() % n); }
};

std::map<CycleType, Scalar> specht_character_table(const Partition& mu,
                                                   const Field& f) {
  std::map<CycleType, Scalar> chi;
  for (const CycleType& lambda : cycle_types(mu.n()))
    chi[lambda] = Scalar::from_int(f, specht_character(mu, lambda));
  return chi;
}

CoherentSequence specht_chain(const Partition& mu, int steps, const Field& f) {
  std::vector<EquivMap> maps;
  Partition shape = mu;
  for (int i = 0; i < steps; ++i) {
    maps.push_back(stabilization_map(shape, f));
    shape = stab(shape);
  }
  return make_coherent_sequence(std::move(maps));
}

// Random element of S_{letters lo..m-1} embedded in S_m.
Perm random_tail_perm(Rng& rng, int m, int lo) {
  Perm p = perm_identity(m);
  for (int i = m - 1; i > lo; --i) {
    int j = lo + rng.below(i - lo + 1);
    std::swap(p[i], p[j]);
  }
  return p;
}

void add_chain_cases(std::vector<CaseSpec>& specs, const VerifyOptions& opt) {
  const Field f = opt.field;

  for (int n = 2; n <= std::min(opt.max_n, 6); ++n) {
    specs.push_back(
        {"chain/stab-trivial/n=" + std::to_string(n), "sec1-example-1", 0,
         [n, f](VerifyCase& c) {
           CentralStabilization cs = central_stabilization(trivial_inclusion(n, f));
           c.dimensions = {cs.rep->dim};
           bool ok = cs.rep->dim == 1;
           for (const Matrix& g : cs.rep->gens) ok = ok && g.is_identity();
           return ok;
         }});
    specs.push_back(
        {"chain/stab-perm/n=" + std::to_string(n), "sec1-example-2", 0,
         [n, f](VerifyCase& c) {
           CentralStabilization cs = central_stabilization(perm_inclusion(n, f));
           c.dimensions = {cs.rep->dim};
           return cs.rep->dim == n + 1 &&
                  character(*cs.rep) == character(*perm_rep(n + 1, f));
         }});
  }

  for (int n = 1; n <= std::min(opt.max_n, 3); ++n)
    for (const Partition& mu : enumerate_partitions(n))
      for (int m = n + 2; m <= opt.max_m; ++m) {
        specs.push_back(
            {"chain/dd-zero/mu=" + mu.str() + "/M=" + std::to_string(m),
             "lemma-4.4", 0, [mu, m, n, f](VerifyCase& c) {
               // The builder throws when any consecutive product fails
               // to vanish.
               ChainComplex complex =
                   central_stability_complex(specht_chain(mu, m - n, f), m);
               for (const SymRepPtr& t : complex.terms)
                 c.dimensions.push_back(t->dim);
               return true;
             }});
      }

  for (int n = 1; n <= std::min(opt.max_n, 4); ++n)
    for (int m = n + 2; m <= opt.max_m; ++m)
      for (int trial = 0; trial < 5; ++trial) {
        specs.push_back({"chain/transversal/n=" + std::to_string(n) +
                             "/M=" + std::to_string(m) + "/trial=" +
                             std::to_string(trial),
                         "lemma-4.1", 0, [n, m, trial, f](VerifyCase& c) {
                           const auto mus = enumerate_partitions(n);
                           const Partition mu = mus[trial % mus.size()];
                           EquivMap phi = stabilization_map(mu, f);
                           EquivMap canonical = boundary_map(phi, m);
                           Rng rng(static_cast<std::uint64_t>(n) * 1009 + m * 31 +
                                   trial);
                           BoundaryTransversal tr;
                           for (int a = n; a < m; ++a)
                             tr.push_back(perm_compose(
                                 perm_transposition(m, n, a),
                                 random_tail_perm(rng, m, n + 1)));
                           EquivMap alternate = boundary_map(phi, m, &tr);
                           c.dimensions = {canonical.source->dim,
                                           canonical.target->dim};
                           return alternate.matrix == canonical.matrix;
                         }});
      }

  auto presentation_case = [f](VerifyCase& c, const EquivMap& phi) {
    EquivMap d = boundary_map(phi, phi.source->n + 2);
    QuotientRep coker = boundary_cokernel(d);
    CentralStabilization cs = central_stabilization(phi);
    c.dimensions = {coker.rep->dim, cs.rep->dim};
    return coker.rep->dim == cs.rep->dim &&
           character(*coker.rep) == character(*cs.rep);
  };
  for (int n = 2; n <= std::min(opt.max_n, 5); ++n) {
    specs.push_back({"chain/presentation/trivial/n=" + std::to_string(n),
                     "lemma-4.3", 0, [n, f, presentation_case](VerifyCase& c) {
                       return presentation_case(c, trivial_inclusion(n, f));
                     }});
    specs.push_back({"chain/presentation/perm/n=" + std::to_string(n),
                     "lemma-4.3", 0, [n, f, presentation_case](VerifyCase& c) {
                       return presentation_case(c, perm_inclusion(n, f));
                     }});
  }
  for (int n = 1; n <= std::min(opt.max_n, 5); ++n)
    for (const Partition& mu : enumerate_partitions(n))
      specs.push_back({"chain/presentation/specht/mu=" + mu.str(), "lemma-4.3",
                       0, [mu, f, presentation_case](VerifyCase& c) {
                         return presentation_case(c, stabilization_map(mu, f));
                       }});

  if (opt.max_n >= 5) {
    specs.push_back({"chain/potential/trivial-chain", "sec4-potential", 0,
                     [f](VerifyCase& c) {
                       std::vector<EquivMap> maps;
                       for (int n = 2; n <= 5; ++n)
                         maps.push_back(trivial_inclusion(n, f));
                       c.dimensions = {1, 1, 1, 1, 1};
                       return potential_check(make_coherent_sequence(std::move(maps)));
                     }});
    specs.push_back({"chain/potential/perm-chain", "sec4-potential", 0,
                     [f](VerifyCase& c) {
                       std::vector<EquivMap> maps;
                       for (int n = 2; n <= 5; ++n)
                         maps.push_back(perm_inclusion(n, f));
                       CoherentSequence seq = make_coherent_sequence(std::move(maps));
                       for (const SymRepPtr& rep : seq.reps)
                         c.dimensions.push_back(rep->dim);
                       return potential_check(seq);
                     }});
  }
}

void add_resolution_cases(std::vector<CaseSpec>& specs, const VerifyOptions& opt) {
  const Field f = opt.field;

  for (int n = 1; n <= std::min(opt.max_n, 3); ++n)
    for (const Partition& mu : enumerate_partitions(n))
      for (int k = 1; k <= opt.max_k; ++k) {
        specs.push_back(
            {"resolution/exactness/mu=" + mu.str() + "/k=" + std::to_string(k),
             "prop-6.2", 0, [mu, k, n, f](VerifyCase& c) {
               ChainComplex complex =
                   central_stability_complex(specht_chain(mu, k, f), n + k);
               for (const SymRepPtr& t : complex.terms)
                 c.dimensions.push_back(t->dim);
               c.homology = homology_dims(complex);
               for (int h : c.homology)
                 if (h != 0) return false;
               return true;
             }});
      }

  for (int n = 1; n <= std::min(opt.max_n, 4); ++n)
    for (const Partition& mu : enumerate_partitions(n))
      specs.push_back(
          {"resolution/cor-6.3/mu=" + mu.str(), "cor-6.3", 0,
           [mu, f](VerifyCase& c) {
             CentralStabilization cs =
                 central_stabilization(stabilization_map(mu, f));
             const Partition target = stab_pow(mu, 2);
             c.dimensions = {cs.rep->dim, specht_dim(target)};
             return cs.rep->dim == specht_dim(target) &&
                    character(*cs.rep) == specht_character_table(target, f);
           }});

  for (int n = 1; n <= std::min(opt.max_n, 4); ++n)
    for (const Partition& nu : enumerate_partitions(n))
      for (int k = 1; k <= opt.max_k; ++k) {
        specs.push_back(
            {"resolution/thm-6.4/nu=" + nu.str() + "/k=" + std::to_string(k),
             "thm-6.4", 0, [nu, k, f](VerifyCase& c) {
               const long long whole =
                   induce(specht_module(nu, f).rep, k, Twist::Trivial).rep->dim;
               const long long top =
                   generalized_specht(nu, bracket_weak(nu, k), f).rep->dim;
               const long long bottom =
                   generalized_specht(hatstab(nu), bracket_weak(hatstab(nu), k - 1), f)
                       .rep->dim;
               c.dimensions = {whole, top, bottom};
               return whole == top + bottom;
             }});
      }

  for (int n = 1; n <= std::min(opt.max_n, 3); ++n)
    for (const Partition& nu : enumerate_partitions(n))
      for (int k = 1; k <= opt.max_k; ++k) {
        specs.push_back(
            {"resolution/james-chain/nu=" + nu.str() + "/k=" + std::to_string(k),
             "cor-6.5", 0, [nu, k, f](VerifyCase& c) {
               long long alternating = 0;
               int sign = 1;
               for (int i = 0; i <= k; ++i) {
                 const Partition tail = hatstab_pow(nu, k - i);
                 const long long dim =
                     induce(specht_module(tail, f).rep, i, Twist::Trivial).rep->dim;
                 c.dimensions.push_back(dim);
                 alternating += sign * dim;
                 sign = -sign;
               }
               const long long coker =
                   generalized_specht(nu, bracket_weak(nu, k), f).rep->dim;
               c.dimensions.push_back(coker);
               alternating += sign * coker;
               return alternating == 0;
             }});
      }

  auto width_case = [f](VerifyCase& c, const EquivMap& phi) {
    const int seed_n = phi.target->n;
    CoherentSequence seq = central_stabilization_sequence(phi, 3);
    for (int i = 0; i < seq.length(); ++i) {
      c.dimensions.push_back(seq.reps[i]->dim);
      for (const auto& [mu, m] : decompose(*seq.reps[i]))
        if (mu.part(0) < seq.reps[i]->n - seed_n) return false;
    }
    return true;
  };
  for (int nn = 2; nn <= std::min(opt.max_n, 4); ++nn) {
    specs.push_back({"resolution/width-bound/trivial/N=" + std::to_string(nn),
                     "lemma-7.1", nn + 3,
                     [nn, f, width_case](VerifyCase& c) {
                       return width_case(c, trivial_inclusion(nn, f));
                     }});
    specs.push_back({"resolution/width-bound/perm/N=" + std::to_string(nn),
                     "lemma-7.1", nn + 3,
                     [nn, f, width_case](VerifyCase& c) {
                       return width_case(c, perm_inclusion(nn, f));
                     }});
  }
  for (int n = 1; n <= std::min(opt.max_n - 1, 3); ++n)
    for (const Partition& mu : enumerate_partitions(n))
      specs.push_back({"resolution/width-bound/specht/mu=" + mu.str(),
                       "lemma-7.1", n + 4,
                       [mu, f, width_case](VerifyCase& c) {
                         return width_case(c, stabilization_map(mu, f));
                       }});

  // Stability certificates and the dimension fit over the three stock
  // seeds; both run on the sequence the stabilize command produces.
  if (opt.max_n >= 5) {
    auto certified = [f](VerifyCase& c, const EquivMap& phi, int extra) {
      CoherentSequence seq = central_stabilization_sequence(phi, extra);
      StabilityCertificate cert = specht_stability_certificate(seq);
      DimPolyReport fit = dimension_polynomial_check(seq);
      c.dimensions = fit.computed;
      return cert.all_match && fit.agrees_from_index >= 0;
    };
    specs.push_back({"resolution/certificate/trivial", "thm-E-specht-stability",
                     5, [f, certified](VerifyCase& c) {
                       return certified(c, trivial_inclusion(2, f), 3);
                     }});
    // Seeded at P_2 -> P_3: the matching multiset {(n), (n-1,1)} only
    // exists once both constituents are present.
    specs.push_back({"resolution/certificate/perm", "thm-E-specht-stability", 6,
                     [f, certified](VerifyCase& c) {
                       return certified(c, perm_inclusion(3, f), 3);
                     }});
    specs.push_back({"resolution/certificate/specht:1,1",
                     "thm-E-specht-stability", 5,
                     [f, certified](VerifyCase& c) {
                       return certified(c, stabilization_map(Partition({1, 1}), f),
                                        2);
                     }});
  }
}

void add_restriction_cases(std::vector<CaseSpec>& specs, const VerifyOptions& opt) {
  const Field f = opt.field;
  for (int m = 2; m <= std::min(opt.max_n, 6); ++m)
    for (const Partition& mu : enumerate_partitions(m))
      for (int k = 1; k <= std::min({2, opt.max_k, m - 1}); ++k) {
        specs.push_back(
            {"restriction/thm-6.1/mu=" + mu.str() + "/k=" + std::to_string(k),
             "thm-6.1", m - k, [mu, k, m, f](VerifyCase& c) {
               std::map<Partition, long long> expected;
               for (const auto& [seq, shape] : deletion_sequences(mu, k))
                 expected[shape] += 1;
               auto actual =
                   decompose(*restrict_rep(specht_module(mu, f).rep, m - k));
               for (const auto& [shape, count] : actual)
                 c.dimensions.push_back(count * specht_dim(shape));
               return actual == expected;
             }});
      }
}

void add_duality_cases(std::vector<CaseSpec>& specs, const VerifyOptions& opt) {
  const Field f = opt.field;

  for (int n = 1; n <= std::min(opt.max_n, 5); ++n)
    for (const Partition& nu : enumerate_partitions(n))
      specs.push_back(
          {"duality/conjugate/nu=" + nu.str(), "sec6.5-duality", 0,
           [nu, f](VerifyCase& c) {
             auto lhs = character(*tensor_sign(specht_module(nu, f).rep));
             auto rhs = specht_character_table(conjugate(nu), f);
             c.dimensions = {specht_dim(nu), specht_dim(conjugate(nu))};
             return lhs == rhs;
           }});

  for (int n = 1; n <= std::min(opt.max_n, 6); ++n)
    specs.push_back(
        {"duality/orthogonality/n=" + std::to_string(n),
         "character-orthogonality", 0, [n](VerifyCase& c) {
           const auto mus = enumerate_partitions(n);
           c.dimensions = {static_cast<long long>(mus.size())};
           for (const Partition& mu : mus)
             for (const Partition& nu : mus) {
               mpq_class sum = 0;
               for (const CycleType& lambda : cycle_types(n))
                 sum += mpq_class(class_size(lambda)) *
                        static_cast<long>(specht_character(mu, lambda)) *
                        static_cast<long>(specht_character(nu, lambda));
               sum /= mpq_class(factorial(n));
               if (sum != (mu == nu ? 1 : 0)) return false;
             }
           return true;
         }});

  specs.push_back(
      {"duality/coxeter/stock", "coxeter-relations", 0, [opt](VerifyCase& c) {
         // make_symrep validates the relations; reaching the end means
         // every construction satisfied them.
         const Field f = opt.field;
         for (int n = 2; n <= opt.max_n; ++n) {
           trivial_rep(n, f);
           sign_rep(n, f);
           perm_rep(n, f);
           c.dimensions.push_back(n);
         }
         return true;
       }});
  specs.push_back(
      {"duality/coxeter/specht", "coxeter-relations", 0, [opt](VerifyCase& c) {
         const Field f = opt.field;
         for (int n = 1; n <= std::min(opt.max_n, 4); ++n)
           for (const Partition& mu : enumerate_partitions(n))
             c.dimensions.push_back(specht_module(mu, f).rep->dim);
         return true;
       }});
  specs.push_back(
      {"duality/coxeter/induced", "coxeter-relations", 0, [opt](VerifyCase& c) {
         const Field f = opt.field;
         for (int k = 1; k <= std::min(opt.max_k, 3); ++k)
           for (Twist twist : {Twist::Trivial, Twist::Sign})
             c.dimensions.push_back(induce(perm_rep(2, f), k, twist).rep->dim);
         return true;
       }});
}

void add_dimpoly_cases(std::vector<CaseSpec>& specs, const VerifyOptions& opt) {
  for (int n = 1; n <= std::min(opt.max_n, 5); ++n)
    for (const Partition& mu : enumerate_partitions(n))
      specs.push_back(
          {"dimpoly/sec-8/mu=" + mu.str(), "sec8-dimension-polynomial", 0,
           [mu, opt](VerifyCase& c) {
             for (int k = 0; k <= std::max(opt.max_k, 5); ++k) {
               const long long predicted = dim_poly(mu, k);
               const long long counted = specht_dim(stab_pow(mu, k));
               c.dimensions.push_back(counted);
               if (predicted != counted) return false;
             }
             return true;
           }});

  for (int n = 1; n <= std::min(opt.max_n, 7); ++n)
    specs.push_back({"dimpoly/square-sum/n=" + std::to_string(n),
                     "classical-square-sum", 0, [n](VerifyCase& c) {
                       long long total = 0;
                       for (const Partition& mu : enumerate_partitions(n)) {
                         const long long d = specht_dim(mu);
                         total += d * d;
                       }
                       c.dimensions = {total};
                       return mpz_class(static_cast<long>(total)) == factorial(n);
                     }});

  for (int n = 2; n <= std::min(opt.max_n, 5); ++n)
    for (const Partition& mu : enumerate_partitions(n))
      specs.push_back({"dimpoly/branching-sum/mu=" + mu.str(), "thm-6.1", 0,
                       [mu](VerifyCase& c) {
                         long long total = 0;
                         for (const auto& [seq, shape] : deletion_sequences(mu, 1))
                           total += specht_dim(shape);
                         c.dimensions = {total, specht_dim(mu)};
                         return total == specht_dim(mu);
                       }});
}

}  // namespace

bool glob_match(const std::string& pattern, const std::string& text) {
  std::function<bool(size_t, size_t)> match = [&](size_t p, size_t t) {
    while (p < pattern.size()) {
      if (pattern[p] == '*') {
        for (size_t skip = t; skip <= text.size(); ++skip)
          if (match(p + 1, skip)) return true;
        return false;
      }
      if (t == text.size()) return false;
      if (pattern[p] != '?' && pattern[p] != text[t]) return false;
      ++p;
      ++t;
    }
    return t == text.size();
  };
  return match(0, 0);
}

std::vector<VerifyCase> run_suite(const std::string& suite, const VerifyOptions& opt) {
  const bool all = suite == "all";
  if (!all && suite != "chain" && suite != "resolution" && suite != "restriction" &&
      suite != "duality" && suite != "dimpoly")
    throw ParseError("unknown suite '" + suite + "'");

  std::vector<CaseSpec> specs;
  if (all || suite == "chain") add_chain_cases(specs, opt);
  if (all || suite == "resolution") add_resolution_cases(specs, opt);
  if (all || suite == "restriction") add_restriction_cases(specs, opt);
  if (all || suite == "duality") add_duality_cases(specs, opt);
  if (all || suite == "dimpoly") add_dimpoly_cases(specs, opt);

  if (!opt.filter.empty()) {
    std::vector<CaseSpec> kept;
    for (auto& spec : specs)
      if (glob_match(opt.filter, spec.id)) kept.push_back(std::move(spec));
    specs = std::move(kept);
  }

  // Refuse up front when a surviving case needs a semisimplicity level
  // the field cannot provide.
  for (const CaseSpec& spec : specs)
    if (spec.semisimple_n > 0) require_semisimple(opt.field, spec.semisimple_n);

  std::vector<VerifyCase> results(specs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (size_t i = 0; i < specs.size(); ++i) {
    VerifyCase c;
    c.id = specs[i].id;
    c.paper_statement = specs[i].statement;
    try {
      c.pass = specs[i].run(c);
      if (!c.pass && c.detail.empty()) c.detail = "check failed";
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = e.what();
    }
    results[i] = std::move(c);
  }
  return results;
}

bool all_passed(const std::vector<VerifyCase>& cases) {
  for (const VerifyCase& c : cases)
    if (!c.pass) return false;
  return true;
}

Json report_to_json(const std::string& suite, const VerifyOptions& opt,
                    const std::vector<VerifyCase>& cases) {
  Json out;
  out["schema"] = kSchemaTag;
  out["type"] = "report";
  out["suite"] = suite;
  out["field"] = opt.field.spec();
  Json bounds;
  bounds["max_n"] = opt.max_n;
  bounds["max_k"] = opt.max_k;
  bounds["max_m"] = opt.max_m;
  out["bounds"] = std::move(bounds);
  if (!opt.filter.empty()) out["filter"] = opt.filter;
  Json case_list = Json::array();
  for (const VerifyCase& c : cases) {
    Json jc;
    jc["id"] = c.id;
    jc["paper_statement"] = c.paper_statement;
    jc["dimensions"] = c.dimensions;
    jc["homology"] = c.homology;
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    case_list.push_back(std::move(jc));
  }
  out["cases"] = std::move(case_list);
  out["pass"] = all_passed(cases);
  return out;
}

}  // namespace centstab
