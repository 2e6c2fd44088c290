#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ionwire/ionwire.hpp"
#include "test_helpers.hpp"

using namespace ionwire;
using doctest::Approx;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) out[std::size_t(k)] = lo + (hi - lo) * k / (n - 1);
    return out;
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("exchange time and phase at the reference point") {
    const SystemConfig cfg = testing::baseline_config();
    const ExchangeResult ex = exchange_time(cfg);

    CHECK(ex.t_ex == Approx(0.18659292497679458).epsilon(1e-12));
    CHECK(ex.theta_principal == Approx(1.099411625067514).epsilon(1e-5));
    CHECK(ex.winding == 186593);
    CHECK(ex.resonant);

    // internal consistency: theta = pi (m w^2 / gamma + 1/2), t_ex = pi w m / gamma
    const TwoModeHamiltonian sys = TwoModeHamiltonian::from_config(cfg);
    CHECK(ex.gamma == Approx(sys.gamma).epsilon(1e-15));
    CHECK(ex.theta ==
          Approx(constants::pi * (sys.mass * sys.omega1 * sys.omega1 / sys.gamma + 0.5))
              .epsilon(1e-13));
    CHECK(ex.t_ex ==
          Approx(constants::pi * sys.omega1 * sys.mass / sys.gamma).epsilon(1e-14));
    CHECK(ex.theta ==
          Approx(ex.theta_principal + 2.0 * constants::pi * double(ex.winding))
              .epsilon(1e-12));
}

TEST_CASE("exchange bookkeeping for the desk-scaled pair") {
    // x = 1e-3: t_ex = 1000 pi, theta = 1000.5 pi = 500 turns + pi/2
    const TwoModeHamiltonian sys = testing::desk_pair(1e-3);
    const ExchangeResult ex = exchange_time(sys);
    CHECK(ex.t_ex == Approx(1000.0 * constants::pi).epsilon(1e-14));
    CHECK(ex.theta == Approx(1000.5 * constants::pi).epsilon(1e-14));
    CHECK(ex.theta_principal == Approx(0.5 * constants::pi).epsilon(1e-10));
    CHECK(ex.winding == 500);
    CHECK(sys.coupling_ratio() == Approx(1e-3).epsilon(1e-15));
}

TEST_CASE("detuned pairs are rejected by the closed forms") {
    TwoModeHamiltonian sys = testing::desk_pair(1e-3);
    sys.omega2 = 1.001;
    CHECK_FALSE(sys.resonant());
    CHECK_THROWS_AS((void)exchange_time(sys), NonResonantError);

    const QuantumState psi = QuantumState::fock(4, 1, 0);
    CHECK_THROWS_AS((void)evolve_rwa(sys, psi, 1.0, 4), NonResonantError);
}

TEST_CASE("classical evolution transfers the motion completely and comes back") {
    const TwoModeHamiltonian sys = testing::desk_pair(1e-3);
    const double t_ex = exchange_time(sys).t_ex;
    const ClassicalState start{{1.0, 0.0}, {0.0, 0.0}};
    const double total = classical_energy(sys, start);

    const ClassicalState swapped = evolve_classical(sys, start, t_ex);
    CHECK(ion_energy(sys, swapped, 0) / total < 1e-4);
    CHECK(ion_energy(sys, swapped, 1) / total == Approx(1.0).epsilon(1e-4));

    const ClassicalState back = evolve_classical(sys, start, 2.0 * t_ex);
    CHECK(ion_energy(sys, back, 0) / total == Approx(1.0).epsilon(1e-4));
    CHECK(ion_energy(sys, back, 1) / total < 1e-4);

    // halfway through, the energy is split evenly
    const ClassicalState half = evolve_classical(sys, start, 0.5 * t_ex);
    CHECK(ion_energy(sys, half, 0) / total == Approx(0.5).epsilon(1e-2));
}

TEST_CASE("classical energy is conserved over ten exchange periods") {
    SUBCASE("desk-scaled pair") {
        const TwoModeHamiltonian sys = testing::desk_pair(1e-3);
        const double t_ex = exchange_time(sys).t_ex;
        const ClassicalState start{{1.0, 0.3}, {-0.2, 0.1}};
        const double e0 = classical_energy(sys, start);
        for (double t : linspace(0.0, 10.0 * t_ex, 101)) {
            const ClassicalState s = evolve_classical(sys, start, t);
            CHECK(std::abs(classical_energy(sys, s) - e0) / e0 < 1e-10);
        }
    }
    SUBCASE("physical reference pair") {
        const TwoModeHamiltonian sys =
            TwoModeHamiltonian::from_config(testing::baseline_config());
        const double t_ex = exchange_time(sys).t_ex;
        const ClassicalState start{{1e-9, 0.0}, {0.0, 0.0}};
        const double e0 = classical_energy(sys, start);
        for (double t : linspace(0.0, 10.0 * t_ex, 101)) {
            const ClassicalState s = evolve_classical(sys, start, t);
            CHECK(std::abs(classical_energy(sys, s) - e0) / e0 < 1e-10);
        }
    }
}

TEST_CASE("coupling at or beyond the trap stiffness is unstable") {
    const ClassicalState start{{1.0, 0.0}, {0.0, 0.0}};
    CHECK_THROWS_AS((void)evolve_classical(testing::desk_pair(1.0), start, 1.0),
                    UnstableCouplingError);
    CHECK_THROWS_AS((void)evolve_classical(testing::desk_pair(1.5), start, 1.0),
                    UnstableCouplingError);
    CHECK_NOTHROW((void)evolve_classical(testing::desk_pair(0.99), start, 1.0));
}

TEST_CASE("quantum propagator is unitary at every sampled time") {
    const TwoModeHamiltonian sys = testing::desk_pair(1e-3);
    const double t_ex = exchange_time(sys).t_ex;
    const TwoModePropagator prop(sys, 12, TwoModePropagator::Form::full);
    const QuantumState psi = QuantumState::fock_superposition(12, 0, 1);
    for (double t : linspace(0.0, 10.0 * t_ex, 41)) {
        const QuantumState s = prop.evolve(psi, t);
        CHECK(std::abs(s.squared_norm() - 1.0) < 1e-9);
    }
}

TEST_CASE("a single quantum swaps modes at the exchange time") {
    const TwoModeHamiltonian sys = testing::desk_pair(1e-3);
    const double t_ex = exchange_time(sys).t_ex;
    const TwoModePropagator prop(sys, 12, TwoModePropagator::Form::full);

    const QuantumState s1 = prop.evolve(QuantumState::fock(12, 1, 0), t_ex);
    CHECK(s1.mean_occupation(0) < 1e-3);
    CHECK(s1.mean_occupation(1) == Approx(1.0).epsilon(1e-3));

    const QuantumState s2 = prop.evolve(QuantumState::fock(12, 1, 0), 2.0 * t_ex);
    CHECK(s2.mean_occupation(0) == Approx(1.0).epsilon(1e-3));
}

TEST_CASE("single-quantum superposition transfers with the closed-form phase") {
    const TwoModeHamiltonian sys = testing::desk_pair(1e-3);
    const ExchangeResult ex = exchange_time(sys);
    const std::complex<double> hop = std::exp(std::complex<double>(0.0, -ex.theta));

    const auto target = [&](int n_max) {
        Eigen::VectorXcd amp = Eigen::VectorXcd::Zero((n_max + 1) * (n_max + 1));
        amp[0] = 1.0 / std::sqrt(2.0);        // |0,0>
        amp[1] = hop / std::sqrt(2.0);        // |0,1>
        return QuantumState(n_max, amp);
    };

    SUBCASE("rotating-wave form is exact") {
        const TwoModePropagator prop(sys, 6, TwoModePropagator::Form::rotating_wave);
        const QuantumState out =
            prop.evolve(QuantumState::fock_superposition(6, 0, 1), ex.t_ex);
        CHECK(out.fidelity(target(6)) >= 1.0 - 1e-9);
    }
    SUBCASE("full propagator stays within the published fidelity") {
        const TwoModePropagator prop(sys, 20, TwoModePropagator::Form::full);
        const QuantumState out =
            prop.evolve(QuantumState::fock_superposition(20, 0, 1), ex.t_ex);
        CHECK(out.fidelity(target(20)) >= 0.999);
    }
}

TEST_CASE("coherent amplitude hops modes with phase e^{-i theta}") {
    const TwoModeHamiltonian sys = testing::desk_pair(1e-3);
    const ExchangeResult ex = exchange_time(sys);
    const std::complex<double> mu(1.0, 0.0);
    const std::complex<double> hop = std::exp(std::complex<double>(0.0, -ex.theta));

    const CoherentExchange ce = coherent_exchange(sys, mu);
    CHECK(ce.t_ex == Approx(ex.t_ex).epsilon(1e-14));
    CHECK(ce.mu_out.real() == Approx((mu * hop).real()).epsilon(1e-12));
    CHECK(ce.mu_out.imag() == Approx((mu * hop).imag()).epsilon(1e-12));

    const int n_max = 24;
    const TwoModePropagator prop(sys, n_max, TwoModePropagator::Form::full);
    const QuantumState start = QuantumState::coherent(n_max, mu, 0.0);

    const QuantumState at_tex = prop.evolve(start, ex.t_ex);
    CHECK(at_tex.fidelity(QuantumState::coherent(n_max, 0.0, mu * hop)) >= 0.995);

    const QuantumState at_2tex = prop.evolve(start, 2.0 * ex.t_ex);
    CHECK(at_2tex.fidelity(QuantumState::coherent(n_max, mu * hop * hop, 0.0)) >= 0.995);
}

TEST_CASE("rotating-wave form conserves the excitation number exactly") {
    const TwoModeHamiltonian sys = testing::desk_pair(5e-3);
    const TwoModePropagator prop(sys, 8, TwoModePropagator::Form::rotating_wave);
    const QuantumState start = QuantumState::fock(8, 2, 1);
    for (double t : linspace(0.0, 2000.0, 9)) {
        const QuantumState s = prop.evolve(start, t);
        CHECK(s.mean_occupation(0) + s.mean_occupation(1) == Approx(3.0).epsilon(1e-12));
        CHECK(s.squared_norm() == Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("truncation leaks are detected, not papered over") {
    SUBCASE("initial state crowding the edge is refused") {
        const TwoModeHamiltonian sys = testing::desk_pair(1e-3);
        const TwoModePropagator prop(sys, 6, TwoModePropagator::Form::full);
        CHECK_THROWS_AS((void)prop.evolve(QuantumState::fock(6, 6, 0), 1.0),
                        TruncationLeakError);
        CHECK_THROWS_AS((void)prop.evolve(QuantumState::fock(6, 0, 5), 1.0),
                        TruncationLeakError);
    }
    SUBCASE("strong coupling spilling into the top layer is reported") {
        // x = 0.3 pumps (4,0) up through (5,1), (6,2), ... well past the
        // 1e-6 budget; the entry state itself is clean (layers 5, 6 empty).
        const TwoModeHamiltonian sys = testing::desk_pair(0.3);
        const TwoModePropagator prop(sys, 6, TwoModePropagator::Form::full);
        const QuantumState start = QuantumState::fock(6, 4, 0);
        bool leaked = false;
        for (double t : linspace(0.5, 40.0, 80)) {
            try {
                (void)prop.evolve(start, t);
            } catch (const TruncationLeakError&) {
                leaked = true;
                break;
            }
        }
        CHECK(leaked);
    }
    SUBCASE("mismatched truncations are a usage error") {
        const TwoModeHamiltonian sys = testing::desk_pair(1e-3);
        const TwoModePropagator prop(sys, 6, TwoModePropagator::Form::full);
        CHECK_THROWS_AS((void)prop.evolve(QuantumState::fock(8, 1, 0), 1.0), DomainError);
    }
}

TEST_CASE("centroid of a coherent state follows the classical trajectory") {
    const TwoModeHamiltonian sys = testing::desk_pair(1e-3);
    const double t_ex = exchange_time(sys).t_ex;
    const std::complex<double> mu(1.5, 0.0);

    const int n_max = 20;
    const TwoModePropagator prop(sys, n_max, TwoModePropagator::Form::full);
    const QuantumState start = QuantumState::coherent(n_max, mu, 0.0);

    const double osc_len =
        std::sqrt(constants::planck_hbar / (2.0 * sys.mass * sys.omega1));
    const double scale = 2.0 * osc_len * std::abs(mu);
    ClassicalState classical{{2.0 * osc_len * mu.real(), 0.0},
                             {2.0 * sys.mass * sys.omega1 * osc_len * mu.imag(), 0.0}};

    for (double t : linspace(0.0, t_ex, 11)) {
        const QuantumState s = prop.evolve(start, t);
        const ClassicalState c = evolve_classical(sys, classical, t);
        CHECK(std::abs(prop.position_expectation(s, 0) - c.positions[0]) / scale < 1e-6);
        CHECK(std::abs(prop.position_expectation(s, 1) - c.positions[1]) / scale < 1e-6);
    }
}

TEST_CASE("rotating-wave error metric matches the published regime") {
    SUBCASE("x = 0.1 stays below 5 percent") {
        const TwoModeHamiltonian sys = testing::desk_pair(0.1);
        const auto grid = linspace(0.0, exchange_time(sys).t_ex, 2001);
        const double err = rwa_error_metric(sys, grid);
        CHECK(err < 0.05);
        CHECK(err > 1e-3);  // the deviation is real, not a degenerate zero
    }
    SUBCASE("x = 0.01 stays below 1 percent") {
        const TwoModeHamiltonian sys = testing::desk_pair(0.01);
        const auto grid = linspace(0.0, exchange_time(sys).t_ex, 2001);
        const double err = rwa_error_metric(sys, grid);
        CHECK(err < 0.01);
        CHECK(err > 1e-4);
    }
    SUBCASE("weaker coupling tracks the envelope more closely") {
        const auto grid_a = linspace(0.0, exchange_time(testing::desk_pair(0.1)).t_ex, 801);
        const auto grid_b = linspace(0.0, exchange_time(testing::desk_pair(0.01)).t_ex, 801);
        CHECK(rwa_error_metric(testing::desk_pair(0.01), grid_b) <
              rwa_error_metric(testing::desk_pair(0.1), grid_a));
    }
}

TEST_CASE("detuning shuts the transfer off") {
    const double x = 1e-3;
    TwoModeHamiltonian sys = testing::desk_pair(x);
    sys.omega2 = 1.0 + 10.0 * x;  // detuning delta = 10 x
    sys.gamma = x * sys.mass * sys.omega1 * sys.omega2;

    const ClassicalState start{{1.0, 0.0}, {0.0, 0.0}};
    const double total = classical_energy(sys, start);
    double max_fraction = 0.0;
    for (double t : linspace(0.0, 4000.0, 8001)) {
        const ClassicalState s = evolve_classical(sys, start, t);
        max_fraction = std::max(max_fraction, ion_energy(sys, s, 1) / total);
    }
    CHECK(max_fraction < 0.05);
    CHECK(max_fraction > 1e-3);  // some leakage does occur
}

TEST_CASE("n-ion coupling matrix reduces to the pair result") {
    const SystemConfig cfg = testing::baseline_config();
    const CouplingMatrix cm = build_n_ion_coupling(cfg);
    REQUIRE(cm.gamma.rows() == 2);
    CHECK(cm.gamma(0, 1) == Approx(coupling_constant(cfg).gamma).epsilon(1e-13));
    CHECK(cm.gamma(1, 0) == Approx(cm.gamma(0, 1)).epsilon(1e-15));
    CHECK(cm.gamma(0, 0) == 0.0);
    CHECK(cm.gamma(1, 1) == 0.0);
    CHECK(cm.warnings.empty());
}

TEST_CASE("n-ion coupling matrix carries per-pair regime warnings") {
    SystemConfig cfg = testing::baseline_config();
    cfg.geometry.ion_heights = {150e-6, 150e-6, 150e-6};
    cfg.modes = ModeSpec::from_frequencies({1e6, 1e6, 1e6});
    // pairs (0,1), (0,2), (1,2): middle one sits closer than ten wire heights
    cfg.geometry.ion_separations = {1e-3, 4e-3, 3e-3};
    const CouplingMatrix cm = build_n_ion_coupling(cfg);
    REQUIRE(cm.gamma.rows() == 3);
    CHECK_FALSE(cm.warnings.empty());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(cm.gamma(i, j) == Approx(cm.gamma(j, i)).epsilon(1e-15));
}

TEST_CASE("three-ion chain conserves energy through exchange") {
    SystemConfig cfg = testing::baseline_config();
    cfg.geometry.ion_heights = {150e-6, 150e-6, 150e-6};
    cfg.modes = ModeSpec::from_frequencies({1e6, 1e6, 1e6});
    const NModeHamiltonian sys = NModeHamiltonian::from_config(cfg);

    const double t_ex = exchange_time(testing::baseline_config()).t_ex;
    const ClassicalState start{{1e-9, 0.0, 0.0}, {0.0, 0.0, 0.0}};
    const double e0 = classical_energy(sys, start);
    double worst = 0.0;
    for (double t : linspace(0.0, 10.0 * t_ex, 101)) {
        const ClassicalState s = evolve_classical(sys, start, t);
        worst = std::max(worst, std::abs(classical_energy(sys, s) - e0) / e0);
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("the n-ion path agrees with the pair path for two ions") {
    const SystemConfig cfg = testing::baseline_config();
    const TwoModeHamiltonian pair = TwoModeHamiltonian::from_config(cfg);
    const NModeHamiltonian chain = NModeHamiltonian::from_config(cfg);

    // Short times: over long spans the two routes' independently rounded
    // eigenfrequencies drift apart in phase, which is not what this checks.
    const ClassicalState start{{1e-9, -0.4e-9}, {0.0, 1e-28}};
    std::mt19937 rng(13);
    for (int k = 0; k < 8; ++k) {
        const double t = testing::uniform(rng, 0.0, 1e-3);
        const ClassicalState a = evolve_classical(pair, start, t);
        const ClassicalState b = evolve_classical(chain, start, t);
        for (int i = 0; i < 2; ++i) {
            CHECK(a.positions[std::size_t(i)] ==
                  Approx(b.positions[std::size_t(i)]).epsilon(1e-8).scale(1e-9));
            CHECK(a.momenta[std::size_t(i)] ==
                  Approx(b.momenta[std::size_t(i)]).epsilon(1e-8).scale(1e-27));
        }
    }
}

}  // TEST_SUITE
