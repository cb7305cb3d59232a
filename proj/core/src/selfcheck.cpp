#include "superschur/selfcheck.hpp"

#include "superschur/commutant.hpp"
#include "superschur/fractions.hpp"
#include "superschur/ideals.hpp"
#include "superschur/schur_weyl.hpp"

#include <functional>

namespace superschur {

GroupAlgebraElement random_element(int degree, std::mt19937_64& rng, int max_terms) {
    const auto perms = all_perms(degree);
    GroupAlgebraElement x(degree);
    size_t terms = 1 + rng() % static_cast<size_t>(max_terms);
    for (size_t i = 0; i < terms; ++i) {
        const Perm& sigma = perms[rng() % perms.size()];
        long num = static_cast<long>(rng() % 19) - 9;
        if (num == 0) num = 1;
        long den = 1 + static_cast<long>(rng() % 4);
        Rational c(num, den);
        c.canonicalize();
        x.add_term(sigma, c);
    }
    return x;
}

namespace {

MatMorphism random_morphism(SuperSpace source, SuperSpace target, std::mt19937_64& rng) {
    MatMorphism f = MatMorphism::zero(source, target);
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) {
            if (target.parity(i) != source.parity(j)) continue; // keep it even
            long num = static_cast<long>(rng() % 7) - 3;
            f.mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rational(num);
        }
    return f;
}

struct Runner {
    std::vector<PropertyResult> results;
    std::uint64_t seed;

    void check(const std::string& name, const std::function<bool(std::string&)>& body) {
        PropertyResult r;
        r.name = name;
        try {
            r.passed = body(r.detail);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

} // namespace

std::vector<PropertyResult> run_selfcheck(std::uint64_t seed) {
    Runner runner;
    runner.seed = seed;

    runner.check("partitions/lr-symmetry", [&](std::string& detail) {
        for (int d = 0; d <= 5; ++d)
            for (const Partition& lambda : partitions_of(d))
                for (int k = 0; k <= d; ++k)
                    for (const Partition& mu : partitions_of(k))
                        for (const Partition& nu : partitions_of(d - k))
                            if (lr_coeff(lambda, mu, nu) != lr_coeff(lambda, nu, mu)) {
                                detail = lambda.to_string() + ";" + mu.to_string();
                                return false;
                            }
        return true;
    });

    runner.check("partitions/lr-transpose-equivariance", [&](std::string& detail) {
        for (int d = 0; d <= 5; ++d)
            for (const Partition& lambda : partitions_of(d))
                for (int k = 0; k <= d; ++k)
                    for (const Partition& mu : partitions_of(k))
                        for (const Partition& nu : partitions_of(d - k))
                            if (lr_coeff(lambda, mu, nu) !=
                                lr_coeff(lambda.transpose(), mu.transpose(), nu.transpose())) {
                                detail = lambda.to_string();
                                return false;
                            }
        return true;
    });

    runner.check("partitions/lr-induction-dimension", [&](std::string& detail) {
        for (int total = 0; total <= 5; ++total)
            for (int k = 0; k <= total; ++k)
                for (const Partition& mu : partitions_of(k))
                    for (const Partition& nu : partitions_of(total - k)) {
                        Integer sum = 0;
                        for (const Partition& lambda : partitions_of(total))
                            sum += Integer(static_cast<long>(lr_coeff(lambda, mu, nu))) *
                                   count_standard_tableaux(lambda);
                        Integer expected = binomial(total, k) * count_standard_tableaux(mu) *
                                           count_standard_tableaux(nu);
                        if (sum != expected) {
                            detail = mu.to_string() + ";" + nu.to_string();
                            return false;
                        }
                    }
        return true;
    });

    runner.check("partitions/weyl-dim-vs-tau", [&](std::string& detail) {
        for (int d = 0; d <= 5; ++d)
            for (const Partition& lambda : partitions_of(d))
                for (int m = std::max(1, lambda.rows()); m <= 4; ++m)
                    if (Rational(weyl_dim(lambda, m)) != tau_weyl(lambda, m)) {
                        detail = lambda.to_string() + " m=" + std::to_string(m);
                        return false;
                    }
        return true;
    });

    runner.check("symgroup/quasi-idempotence", [&](std::string& detail) {
        for (int d = 1; d <= 5; ++d)
            for (const Partition& lambda : partitions_of(d)) {
                GroupAlgebraElement c = young_symmetrizer(lambda);
                if (c * c != c * quasi_idempotent_scalar(lambda)) {
                    detail = lambda.to_string();
                    return false;
                }
            }
        return true;
    });

    runner.check("symgroup/contract-embed-interchange", [&](std::string&) {
        std::mt19937_64 rng(runner.seed + 101);
        for (int d = 1; d <= 4; ++d)
            for (int rep = 0; rep < 10; ++rep) {
                GroupAlgebraElement x = random_element(d, rng);
                Rational t(static_cast<long>(rng() % 7) - 3);
                if (x.embed().contract(t) != x * t) return false;
            }
        return true;
    });

    runner.check("symgroup/support-additivity", [&](std::string&) {
        std::mt19937_64 rng(runner.seed + 102);
        for (int d = 2; d <= 4; ++d)
            for (int rep = 0; rep < 6; ++rep) {
                GroupAlgebraElement x = random_element(d, rng);
                GroupAlgebraElement y = random_element(d, rng);
                auto sx = isotypic_support(x);
                auto sy = isotypic_support(y);
                for (const Partition& lambda : isotypic_support(x * y))
                    if (sx.count(lambda) == 0 || sy.count(lambda) == 0) return false;
            }
        return true;
    });

    runner.check("supereval/koszul-coherence", [&](std::string&) {
        for (SuperSpace space : {SuperSpace{1, 1}, SuperSpace{2, 1}, SuperSpace{0, 2}})
            for (int d = 2; d <= 3; ++d)
                for (const Perm& sigma : all_perms(d))
                    for (const Perm& tau : all_perms(d))
                        if (perm_operator(sigma.compose(tau), space) !=
                            perm_operator(sigma, space).compose(perm_operator(tau, space)))
                            return false;
        return true;
    });

    runner.check("supereval/functoriality", [&](std::string&) {
        std::mt19937_64 rng(runner.seed + 103);
        for (SuperSpace space : {SuperSpace{1, 1}, SuperSpace{2, 1}})
            for (int d = 1; d <= 3; ++d)
                for (int rep = 0; rep < 5; ++rep) {
                    GroupAlgebraElement x = random_element(d, rng);
                    GroupAlgebraElement y = random_element(d, rng);
                    if (evaluate(x * y, space) != evaluate(x, space).compose(evaluate(y, space)))
                        return false;
                    if (evaluate(x.embed(), space) != evaluate(x, space).tensor_identity())
                        return false;
                }
        return true;
    });

    runner.check("supereval/supertrace-identity", [&](std::string&) {
        std::mt19937_64 rng(runner.seed + 104);
        for (SuperSpace space : {SuperSpace{1, 0}, SuperSpace{1, 1}, SuperSpace{2, 1}})
            for (int d = 1; d <= 4; ++d)
                for (int rep = 0; rep < 8; ++rep) {
                    GroupAlgebraElement x = random_element(d, rng);
                    if (evaluate(x, space).supertrace() !=
                        x.trace_poly().evaluate(Rational(space.superdim())))
                        return false;
                }
        return true;
    });

    runner.check("supereval/contract-vs-partial-supertrace", [&](std::string&) {
        std::mt19937_64 rng(runner.seed + 105);
        for (SuperSpace space : {SuperSpace{1, 0}, SuperSpace{1, 1}, SuperSpace{0, 2}})
            for (int d = 2; d <= 3; ++d)
                for (int rep = 0; rep < 6; ++rep) {
                    GroupAlgebraElement x = random_element(d, rng);
                    SuperOperator lhs = evaluate(x.contract(Rational(space.superdim())), space);
                    SuperOperator rhs = evaluate(x, space).partial_supertrace(d);
                    if (lhs != rhs) return false;
                }
        return true;
    });

    runner.check("supereval/commutant-three-routes", [&](std::string& detail) {
        for (SuperSpace space : {SuperSpace{1, 0}, SuperSpace{0, 1}, SuperSpace{1, 1}, SuperSpace{2, 0}})
            for (int d = 1; d <= 3; ++d) {
                long dim = static_cast<long>(commutant_dim(space, d));
                long span = static_cast<long>(symmetry_span_dim(space, d));
                Integer hook = hook_dimension_sum(space, d);
                if (hook != dim || hook != span) {
                    detail = space.to_string() + " d=" + std::to_string(d);
                    return false;
                }
            }
        return true;
    });

    runner.check("supereval/semisimplicity", [&](std::string&) {
        for (SuperSpace space : {SuperSpace{1, 0}, SuperSpace{1, 1}, SuperSpace{2, 1}})
            for (int d = 1; d <= 3; ++d)
                if (!image_algebra_semisimple(space, d)) return false;
        return true;
    });

    runner.check("schurweyl/p-square-vs-trace-poly", [&](std::string&) {
        for (int m0 = 1; m0 <= 2; ++m0) {
            Partition square(std::vector<int>(static_cast<size_t>(m0), m0));
            if (p_square_closed_form(m0) != young_idempotent(square).trace_poly()) return false;
        }
        return true;
    });

    runner.check("schurweyl/tau-product-forms", [&](std::string&) {
        for (int m0 = 1; m0 <= 2; ++m0) {
            Partition square(std::vector<int>(static_cast<size_t>(m0), m0));
            for (int m = 2 * m0; m <= 8; ++m)
                if (tau_rho_product(m0, m) != tau_weyl(square, m)) return false;
        }
        return true;
    });

    runner.check("schurweyl/vanishes-vs-rank", [&](std::string& detail) {
        for (int d = 1; d <= 4; ++d)
            for (const Partition& lambda : partitions_of(d))
                for (SuperSpace space :
                     {SuperSpace{1, 0}, SuperSpace{0, 1}, SuperSpace{1, 1}, SuperSpace{2, 0}}) {
                    DimPair dims = schur_dim(lambda, space);
                    bool vanished = dims.even == 0 && dims.odd == 0;
                    if (vanished != schur_vanishes(lambda, space)) {
                        detail = lambda.to_string() + " on " + space.to_string();
                        return false;
                    }
                }
        return true;
    });

    runner.check("schurweyl/contraction-entry-closed-vs-direct", [&](std::string& detail) {
        for (int d = 1; d <= 4; ++d)
            for (const Partition& lambda : partitions_of(d))
                for (auto [m, n] : {std::pair{2, 1}, {1, 1}, {3, 0}, {2, 2}}) {
                    for (int l = 1; l <= lambda.part(0); ++l)
                        if (contraction_entry(lambda, l, m, n) !=
                            contraction_entry_direct(lambda, l, m, n)) {
                            detail = lambda.to_string() + " l=" + std::to_string(l) + " " +
                                     std::to_string(m) + "|" + std::to_string(n);
                            return false;
                        }
                }
        return true;
    });

    runner.check("schurweyl/rectangle-criterion-biconditional", [&](std::string& detail) {
        for (int d = 1; d <= 4; ++d)
            for (const Partition& lambda : partitions_of(d))
                for (SuperSpace space : {SuperSpace{1, 0}, SuperSpace{0, 1}, SuperSpace{1, 1}}) {
                    RectangleCriterion crit = rectangle_criterion(lambda, space);
                    bool flagged = crit.f_nonzero && crit.all_contractions_zero;
                    bool predicted = lambda.is_rectangle() &&
                                     lambda.rows() - lambda.part(0) == space.superdim() &&
                                     !schur_vanishes(lambda, space);
                    if (flagged != predicted) {
                        detail = lambda.to_string() + " on " + space.to_string();
                        return false;
                    }
                }
        return true;
    });

    runner.check("ideals/orientation-pin", [&](std::string&) {
        return detect_rectangle_orientation() == RectangleOrientation::transposed;
    });

    runner.check("ideals/member-vs-containment", [&](std::string& detail) {
        for (int d = 1; d <= 4; ++d)
            for (const Partition& lambda : partitions_of(d))
                for (auto [m, n] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 0}}) {
                    bool member = member_by_eval(young_symmetrizer(lambda), m, n);
                    if (member != jmn_sequence(m, n, d).is_killed(d, lambda)) {
                        detail = lambda.to_string();
                        return false;
                    }
                }
        return true;
    });

    runner.check("ideals/jmn-closure", [&](std::string& detail) {
        for (auto [m, n] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}}) {
            ClosureReport report = check_closure(jmn_sequence(m, n, 4));
            if (!report.induction_ok || !report.contraction_ok) {
                detail = std::to_string(m) + "|" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    runner.check("fractions/solver-soundness", [&](std::string&) {
        std::mt19937_64 rng(runner.seed + 106);
        for (int rep = 0; rep < 40; ++rep) {
            int dim_a = 1 + static_cast<int>(rng() % 4);
            SuperSpace a{dim_a, 0};
            SuperSpace unit{1, 0};
            SuperSpace c{1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 2)};
            SuperSpace c_prime{1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 2)};
            MatMorphism f = random_morphism(a, unit, rng);
            if (f.is_zero()) f.mat[0][0] = 1;
            MatMorphism l = random_morphism(c, c_prime, rng);
            MatMorphism h = tensor(f, l);
            FracSolveResult solved = frac_solve(h, f, c, c_prime);
            if (solved.status != FracStatus::ok || !(*solved.solution == l)) return false;
        }
        return true;
    });

    runner.check("fractions/kappa-homomorphism", [&](std::string&) {
        std::mt19937_64 rng(runner.seed + 107);
        for (int rep = 0; rep < 40; ++rep) {
            long a = static_cast<long>(rng() % 9) - 4;
            long b = 1 + static_cast<long>(rng() % 6);
            long c = static_cast<long>(rng() % 9) - 4;
            long d = 1 + static_cast<long>(rng() % 6);
            Fraction x = Fraction::of(Rational(a), Rational(b));
            Fraction y = Fraction::of(Rational(c), Rational(d));
            if (kappa_scalar(frac_add(x, y)) != kappa_scalar(x) + kappa_scalar(y)) return false;
            if (kappa_scalar(frac_mul(x, y)) != kappa_scalar(x) * kappa_scalar(y)) return false;
        }
        return true;
    });

    runner.check("fractions/equivalence-relation", [&](std::string&) {
        std::mt19937_64 rng(runner.seed + 108);
        for (int rep = 0; rep < 25; ++rep) {
            Rational value(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 5));
            value.canonicalize();
            long d1 = 1 + static_cast<long>(rng() % 6), d2 = 1 + static_cast<long>(rng() % 6),
                 d3 = 1 + static_cast<long>(rng() % 6);
            Fraction f1 = Fraction::of(value * d1, Rational(d1));
            Fraction f2 = Fraction::of(value * d2, Rational(d2));
            Fraction f3 = Fraction::of(value * d3, Rational(d3));
            if (!frac_equivalent(f1, f1)) return false;
            if (!frac_equivalent(f1, f2) || !frac_equivalent(f2, f1)) return false;
            if (!frac_equivalent(f2, f3) || !frac_equivalent(f1, f3)) return false;
            Fraction other = Fraction::of(value * d1 + 1, Rational(d1));
            if (frac_equivalent(f1, other)) return false;
        }
        return true;
    });

    runner.check("fractions/same-denominator-rigidity", [&](std::string&) {
        std::mt19937_64 rng(runner.seed + 109);
        for (int rep = 0; rep < 25; ++rep) {
            int dim_a = 1 + static_cast<int>(rng() % 3);
            SuperSpace a{dim_a, 0};
            MatMorphism f = random_morphism(a, a, rng);
            if (f.is_zero()) f.mat[0][0] = 1;
            Rational s(static_cast<long>(rng() % 7) - 3);
            Rational t = s + 1;
            Fraction x = Fraction::make(f * s, f);
            Fraction y = Fraction::make(f * t, f);
            // (h1,f) ~ (h2,f) iff h1 == h2
            if (!frac_equivalent(x, x)) return false;
            if (frac_equivalent(x, y)) return false;
        }
        return true;
    });

    return runner.results;
}

} // namespace superschur
