#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aoicr/overlay.hpp"
#include "aoicr/simulator.hpp"
#include "aoicr/underlay.hpp"

#include <array>
#include <cmath>

using namespace aoicr;

namespace {

const OutageSet kSets[] = {
    {0.03, 0.03, 0.03, 0.28, 0.17, 0.86},
    {0.10, 0.20, 0.10, 0.30, 0.40, 0.60},
    {0.50, 0.50, 0.50, 0.55, 0.70, 0.90},
    {0.01, 0.02, 0.01, 0.05, 0.03, 0.08},
};
const std::pair<double, double> kRatePairs[] = {
    {0.1, 0.1}, {0.4, 0.2}, {0.7, 0.5}, {0.05, 0.9}};

// Stationary distribution by power iteration, stopped at a 1e-13 sup
// delta: the independent comparand for the direct solve.
std::array<double, 4> power_iteration(
    const std::array<std::array<double, 4>, 4>& m) {
    std::array<double, 4> v{0.25, 0.25, 0.25, 0.25};
    for (int it = 0; it < 200000; ++it) {
        std::array<double, 4> next{};
        for (int j = 0; j < 4; ++j)
            for (int i = 0; i < 4; ++i) next[j] += v[i] * m[i][j];
        double delta = 0.0;
        for (int j = 0; j < 4; ++j)
            delta = std::max(delta, std::fabs(next[j] - v[j]));
        v = next;
        if (delta < 1e-13) break;
    }
    return v;
}

} // namespace

TEST_CASE("transition matrix is row-stochastic with nonnegative entries") {
    for (const auto& [p, q] : kRatePairs)
        for (const OutageSet& o : kSets) {
            const MarkovModel mm = build_transition_matrix(p, q, o);
            for (int i = 0; i < 4; ++i) {
                double row = 0.0;
                for (int j = 0; j < 4; ++j) {
                    CHECK(mm.m[i][j] >= 0.0);
                    row += mm.m[i][j];
                }
                CHECK(std::fabs(row - 1.0) < 1e-12);
            }
        }
}

TEST_CASE("direct stationary solve matches power iteration") {
    for (const auto& [p, q] : kRatePairs)
        for (const OutageSet& o : kSets) {
            const MarkovModel mm = build_transition_matrix(p, q, o);
            const std::array<double, 4> pi = stationary_distribution(mm.m);
            const std::array<double, 4> ref = power_iteration(mm.m);
            double mass = 0.0;
            for (int j = 0; j < 4; ++j) {
                CHECK(std::fabs(pi[j] - ref[j]) < 1e-10);
                CHECK(pi[j] > 0.0);
                mass += pi[j];
            }
            CHECK(std::fabs(mass - 1.0) < 1e-12);

            // Fixed point: pi M = pi.
            for (int j = 0; j < 4; ++j) {
                double acc = 0.0;
                for (int i = 0; i < 4; ++i) acc += pi[i] * mm.m[i][j];
                CHECK(std::fabs(acc - pi[j]) < 1e-12);
            }
        }
}

TEST_CASE("conditional success system solves its own recursion") {
    for (const auto& [p, q] : kRatePairs)
        for (const OutageSet& o : kSets)
            for (System z : {System::primary, System::secondary}) {
                const UnderlayRoleParams r = underlay_role_params(z, p, q, o);
                const UnderlayPhiConditionals c = underlay_phi_conditionals(r);
                const double stay = r.zeta_hat + (1.0 - r.zeta_hat) * r.v;
                const double ri =
                    c.pr_phi_i -
                    ((1.0 - r.xi) +
                     r.xi * (1.0 - r.u) *
                         ((1.0 - r.v) * c.pr_phi_i + r.v * c.pr_phi_b));
                const double rb =
                    c.pr_phi_b -
                    ((1.0 - r.xi_hat) +
                     r.xi_hat * (1.0 - r.u) *
                         ((1.0 - r.zeta_hat) * (1.0 - r.v) * c.pr_phi_i +
                          stay * c.pr_phi_b));
                CHECK(std::fabs(ri) < 1e-10);
                CHECK(std::fabs(rb) < 1e-10);
                CHECK(c.pr_phi_i ==
                      doctest::Approx(underlay_closed_form::phi_idle(r))
                          .epsilon(1e-10));
                CHECK(c.pr_phi_b ==
                      doctest::Approx(underlay_closed_form::phi_busy(r))
                          .epsilon(1e-10));
            }
}

TEST_CASE("service expectations match the published solved forms") {
    for (const auto& [p, q] : kRatePairs)
        for (const OutageSet& o : kSets)
            for (System z : {System::primary, System::secondary}) {
                const UnderlayRoleParams r = underlay_role_params(z, p, q, o);
                const UnderlayPhiConditionals c = underlay_phi_conditionals(r);
                const double ei = underlay_closed_form::e_s_idle(
                    r, c.pr_phi_i, c.pr_phi_b);
                const double eb = underlay_closed_form::e_s_busy(
                    r, c.pr_phi_i, c.pr_phi_b);
                CHECK(ei >= 1.0);
                CHECK(eb >= 1.0);
                // The blended service expectation must sit between the
                // conditionals.
                const MarkovModel mm = build_transition_matrix(p, q, o);
                const std::array<double, 4> pi =
                    stationary_distribution(mm.m);
                const double e_s = e_s_underlay(z, r, pi);
                CHECK(e_s >= std::min(ei, eb) - 1e-12);
                CHECK(e_s <= std::max(ei, eb) + 1e-12);
            }
}

TEST_CASE("chain factorizes when interference does not change outages") {
    // With hatted outages equal to the plain ones, the two systems are
    // independent single-system chains; every underlay quantity must
    // collapse to the corresponding standalone formula.
    for (const auto& [p, q] : kRatePairs)
        for (double phi_p : {0.05, 0.3})
            for (double phi_s : {0.1, 0.5}) {
                const OutageSet o{phi_p, phi_s, phi_p,
                                  phi_s, phi_p, phi_s};
                const MarkovModel mm = build_transition_matrix(p, q, o);
                const std::array<double, 4> pi =
                    stationary_distribution(mm.m);

                // Marginal post-generation busy probability of one
                // standalone system: b = p + (1-p) phi b_prev-cycle.
                const auto busy_marginal = [](double rate, double phi) {
                    // Stationary busy mass of the 2-state chain: from busy,
                    // stay busy w.p. rate + phi - rate*phi; from idle, turn
                    // busy w.p. rate.
                    const double stay = rate + phi - rate * phi;
                    return rate / (rate + 1.0 - stay);
                };
                const double bp = busy_marginal(p, phi_p);
                const double bs = busy_marginal(q, phi_s);
                CHECK(pi[0] == doctest::Approx((1 - bp) * (1 - bs))
                                   .epsilon(1e-10));
                CHECK(pi[1] == doctest::Approx(bp * (1 - bs)).epsilon(1e-10));
                CHECK(pi[2] == doctest::Approx((1 - bp) * bs).epsilon(1e-10));
                CHECK(pi[3] == doctest::Approx(bp * bs).epsilon(1e-10));

                const PeakAoiBreakdown got =
                    peak_aoi_underlay(System::primary, p, q, o);
                const PeakAoiBreakdown want =
                    peak_aoi_overlay_primary(p, phi_p);
                CHECK(got.avg_peak ==
                      doctest::Approx(want.avg_peak).epsilon(1e-10));
                CHECK(got.e_s == doctest::Approx(want.e_s).epsilon(1e-10));
            }
}

TEST_CASE("analytic intervals match a long simulation for both systems") {
    const double p = 0.2, q = 0.3;
    const OutageSet o{0.05, 0.1, 0.05, 0.25, 0.35, 0.7};
    const SimReport rep = simulate_abstract(p, q, o, Scheme::underlay, 8000000,
                                            kDefaultWarmup, 424242);
    const auto close3 = [](double analytic, const SampleStats& s) {
        return std::fabs(analytic - s.mean()) <= 3.0 * s.stderror();
    };
    for (System z : {System::primary, System::secondary}) {
        const PeakAoiBreakdown b = peak_aoi_underlay(z, p, q, o);
        const SystemReport& r =
            z == System::primary ? rep.primary : rep.secondary;
        CHECK(close3(b.avg_peak, r.peak));
        CHECK(close3(b.e_y, r.y));
        CHECK(close3(b.e_s, r.s));
        CHECK(close3(b.e_w, r.w));
        CHECK(close3(b.e_k, r.k));
    }
}

TEST_CASE("empirical transitions and occupancy track the model") {
    const double p = 0.25, q = 0.15;
    const OutageSet o{0.1, 0.2, 0.1, 0.3, 0.45, 0.65};
    const MarkovModel mm = build_transition_matrix(p, q, o);
    const std::array<double, 4> pi = stationary_distribution(mm.m);
    const TransitionLog log =
        empirical_transition_log_abstract(p, q, o, 4000000, 99);

    for (int i = 0; i < 4; ++i) {
        // Occupancy within a loose band (correlated samples, so no exact
        // binomial error bar; the acceptance gate uses replicated runs).
        CHECK(std::fabs(log.occupancy_fraction(i) - pi[i]) < 0.002);
        std::uint64_t visits = 0;
        for (int j = 0; j < 4; ++j) visits += log.counts[i][j];
        for (int j = 0; j < 4; ++j) {
            const double f = log.frequency(i, j);
            // Conditional on the visit count the transition choice is
            // i.i.d., so the binomial bar applies.
            const double se = std::sqrt(
                std::max(mm.m[i][j] * (1.0 - mm.m[i][j]) / visits, 1e-18));
            CHECK(std::fabs(f - mm.m[i][j]) <= 4.0 * se + 1e-12);
        }
    }
}
