#include <doctest.h>

#include "huberbound/ledger.hpp"

using hb::Real;

namespace {
bool close(const Real& a, const char* expect, double rel) {
    Real want = Real::from_string(expect, 256);
    return abs(a - want) <= abs(want) * Real(rel, 256);
}
}  // namespace

TEST_CASE("trivial counting constants") {
    long p = 192;
    CHECK(close(hb::compute_B_cofinite(Real(2.0, p), {Real(1.15, p)}),
                "752.0356398146432765", 1e-14));
    Real eightpi = Real(8.0, p) * Real::pi(p);
    CHECK(abs(hb::compute_B_cofinite(Real(1.0, p), {Real(0.0, p)}) - eightpi) < Real(1e-40, p));
    Real twice = hb::compute_B_cofinite(Real(2.0, p), {Real(1.15, p), Real(1.15, p)});
    CHECK(abs(twice - Real(2.0, p) * hb::compute_B_cofinite(Real(2.0, p), {Real(1.15, p)})) <
          Real(1e-30, p));
    CHECK_THROWS_AS(hb::compute_B_cofinite(Real(2.0, p), {}), std::domain_error);

    CHECK(abs(hb::compute_B_cocompact(Real::ln2(p), Real(2.0, p) * Real::pi(p)) - Real(2.0, p)) <
          Real(1e-40, p));
    CHECK(abs(hb::compute_B_cocompact(Real(1.0, p), Real::pi(p)) -
              Real(2.0, p) * Real::e(p)) < Real(1e-40, p));
    // d -> 0+ limit with area 4 pi tends to 1/2
    CHECK(abs(hb::compute_B_cocompact(Real(1e-30, p), Real(4.0, p) * Real::pi(p)) -
              Real(0.5, p)) < Real(1e-29, p));
}

TEST_CASE("cocompact ledger on a synthetic genus-2 style input") {
    hb::FundamentalInvariants inv;
    inv.tau = 0;
    inv.area = Real(4.0, 192) * Real::pi(192);
    inv.diameter_cocompact = Real(3.0, 192);
    inv.A = 1;
    inv.small_s = {Real(1.0, 192)};
    inv.c = Real(1.5, 192);

    auto led = hb::cocompact_ledger(inv);
    CHECK(close(led.at("B"), "10.04276846159383387046426", 1e-20));
    CHECK(close(led.at("C"), "22448.58751166221870048763", 1e-20));
    CHECK(close(led.at("Cu"), "537334532841.0170292460414", 1e-20));
    // A = 1 forces C12 = 2 C1 + 2 = 4e - 2
    CHECK(close(led.at("C12"), "8.87312731383618094144115", 1e-20));
    CHECK(close(led.at("C22"), "-2.258891353270929454598", 1e-18));
    CHECK(led.b_source == "computed");

    // slots that only exist in the cofinite table are absent
    for (const char* k : {"C3", "C4", "C5", "C6", "C7", "C14", "C15"})
        CHECK(led.slots.count(k) == 0);

    // errors
    hb::FundamentalInvariants bad = inv;
    bad.diameter_cocompact.reset();
    CHECK_THROWS_AS(hb::cocompact_ledger(bad), std::domain_error);
    bad = inv;
    bad.A = 2;
    bad.s1 = Real(1.0, 192);
    CHECK_THROWS_AS(hb::cocompact_ledger(bad), std::domain_error);
    bad = inv;
    bad.tau = 1;
    CHECK_THROWS_AS(hb::cocompact_ledger(bad), std::domain_error);
}

TEST_CASE("modular preset reproduces the headline constants") {
    auto inv = hb::psl2z_preset(192);
    CHECK(abs(inv.area - Real::pi(192) / Real(3.0, 192)) < Real(1e-50, 192));
    CHECK(inv.B_override.has_value());

    auto led = hb::cofinite_ledger(inv);
    CHECK(led.b_source == "override");
    CHECK(close(led.at("C4"), "1.484935834736716740734", 1e-18));
    CHECK(led.at("C4") < Real(1.5, 192));
    CHECK(close(led.at("C10"), "5577.674407105794631311", 1e-18));
    CHECK(close(led.at("C21"), "7.638620536958444187731", 1e-18));
    CHECK(close(led.at("mu"), "1.924248652274133921879967", 1e-18));
    CHECK(close(led.at("C"), "1682990.035985376710716", 1e-18));
    CHECK(close(led.at("Cu"), "16607280298603.5621748", 1e-15));

    // against the published figures at 1e-4 relative
    CHECK(close(led.at("C"), "1682997", 1e-4));
    CHECK(close(led.at("Cu"), "16607349020658", 1e-4));

    // with the spectral-counting constant pinned, the tail chain lands on
    // the published Huber bound to ~2e-10 relative
    hb::LedgerOptions opts;
    opts.C_override = Real(1682997.0, 192);
    auto pinned = hb::cofinite_ledger(inv, opts);
    CHECK(close(pinned.at("Cu"), "16607349017331.18925665", 1e-12));
    CHECK(close(pinned.at("Cu"), "16607349020658", 1e-6));
}

TEST_CASE("exact slots hold for any input") {
    auto led = hb::cofinite_ledger(hb::psl2z_preset(192));
    long p = 192;
    CHECK(abs(led.at("C1") - (Real(2.0, p) * Real::e(p) - Real(2.0, p))) < Real(1e-50, p));
    CHECK(abs(led.at("C10") - Real(8480.0, p) * sqrt(Real::e(p) / (Real(2.0, p) * Real::pi(p)))) <
          Real(1e-45, p));
    CHECK(led.at("C22") < Real(0.0, p));  // the single negative slot
    for (const char* k : {"C", "C10", "C13", "C16", "C17", "C18", "C19", "C20", "C21", "Cu"})
        CHECK(led.at(k) > Real(0.0, p));
    for (const auto& [k, v] : led.slots) {
        CAPTURE(k);
        CHECK(v.is_finite());
    }
}

TEST_CASE("cofinite table degenerates to the cocompact one") {
    long p = 192;
    hb::FundamentalInvariants inv;
    inv.tau = 0;
    inv.area = Real(4.0, p) * Real::pi(p);
    inv.A = 1;
    inv.small_s = {Real(1.0, p)};
    inv.c = Real(1.5, p);
    inv.N_sc = 0;
    inv.c1 = Real(1.0, p);
    inv.B_override = hb::compute_B_cocompact(Real(3.0, p), inv.area);

    auto cof = hb::cofinite_ledger(inv);
    inv.diameter_cocompact = Real(3.0, p);
    auto coc = hb::cocompact_ledger(inv);
    for (const char* k : {"B", "C", "C12", "C13", "C16", "C17", "C18", "C19", "C20", "C21",
                          "C22", "Cu", "mu"}) {
        CAPTURE(k);
        CHECK(abs(cof.at(k) - coc.at(k)) <= abs(coc.at(k)) * Real(1e-35, p));
    }
}

TEST_CASE("Cu is monotone in B and in A around the preset") {
    auto inv = hb::psl2z_preset(192);
    Real prev(0.0, 192);
    for (double f : {0.8, 0.9, 1.0, 1.1, 1.2}) {
        auto v = inv;
        v.B_override = Real(753.0 * f, 192);
        Real cu = hb::cofinite_ledger(v).at("Cu");
        CHECK(cu > prev);
        prev = cu;
    }
    // A sweep needs a finite s1
    auto v = inv;
    v.s1 = Real(0.75, 192);
    prev = Real(0.0, 192);
    for (int a = 1; a <= 3; ++a) {
        v.A = a;
        v.small_s.resize(a, Real(0.75, 192));
        Real cu = hb::cofinite_ledger(v).at("Cu");
        CHECK(cu > prev);
        prev = cu;
    }
}

TEST_CASE("report round-trips and flags its inputs") {
    auto led = hb::cofinite_ledger(hb::psl2z_preset(192));
    std::string rep = hb::ledger_report(led);
    CHECK(rep.find("C10 = 5577.674407105794631") != std::string::npos);
    CHECK(rep.find("# B source = override") != std::string::npos);

    auto parsed = hb::parse_ledger_report(rep, 192);
    REQUIRE(parsed.size() == led.slots.size());
    for (const auto& [k, v] : led.slots) {
        CAPTURE(k);
        CHECK(abs(parsed.at(k) - v) <= abs(v) * Real(1e-18, 192));
    }
    // dependent slots re-evaluate from parsed independents
    Real a(1.0, 192);
    Real recomputed = parsed.at("C21") * a +
                      parsed.at("C20") * pow(Real::from_string("6.85", 192), Real(0.75, 192)) /
                          parsed.at("mu") +
                      parsed.at("C20") + parsed.at("C20") * parsed.at("C22") +
                      Real(0.75, 192) * parsed.at("C20") * parsed.at("C21");
    CHECK(abs(recomputed - parsed.at("Cu")) <= parsed.at("Cu") * Real(1e-17, 192));
}

TEST_CASE("invariants config parsing") {
    std::string cfg =
        "tau = 1\n"
        "area = 1.0471975511965977\n"  // ~ pi/3
        "Y = 2\n"
        "diameters = 1.15\n"
        "elliptic_m = 2, 3\n"
        "elliptic_theta = 1.5707963267948966, 1.0471975511965977\n"
        "A = 1\n"
        "s1 = inf\n"
        "N_sc = 1\n"
        "sigma_N = 1\n"
        "c1 = 1\n"
        "c = 6.85\n"
        "B_override = 753\n";
    auto inv = hb::parse_invariants(cfg, 192);
    CHECK(inv.tau == 1);
    CHECK(inv.elliptic.size() == 2);
    CHECK(inv.s1.is_inf());
    auto led = hb::cofinite_ledger(inv);
    // the decimal area only carries ~16 digits, so compare loosely
    CHECK(close(led.at("C"), "1682990.035985376710716", 1e-12));
    CHECK_THROWS_AS(hb::parse_invariants("bogus_key = 1\n", 192), std::invalid_argument);
}
