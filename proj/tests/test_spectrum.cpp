#include <doctest.h>

#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "huberbound/spectrum.hpp"

using hb::Int;
using hb::Real;

namespace {

struct Agg {
    long trace;
    long d;
    long mult;
};

std::vector<Agg> agg_of(const hb::LengthSpectrum& s) {
    std::vector<Agg> out;
    for (const auto& a : hb::aggregate(s))
        out.push_back({a.trace_pow.convert_to<long>(), a.d.convert_to<long>(), a.multiplicity});
    return out;
}

bool operator==(const Agg& x, const Agg& y) {
    return x.trace == y.trace && x.d == y.d && x.mult == y.mult;
}

}  // namespace

TEST_CASE("modular spectrum small cutoffs") {
    auto s25 = hb::modular_spectrum(Real(25.0, 128));
    CHECK(s25.class_count() == 5);
    auto a25 = agg_of(s25);
    REQUIRE(a25.size() == 3);
    CHECK(a25[0] == Agg{3, 5, 1});
    CHECK(a25[1] == Agg{4, 12, 2});
    CHECK(a25[2] == Agg{5, 21, 2});

    auto a35 = agg_of(hb::modular_spectrum(Real(35.0, 128)));
    REQUIRE(a35.size() == 5);
    CHECK(a35[3] == Agg{6, 8, 1});    // same norm 33.97 from two discriminants,
    CHECK(a35[4] == Agg{6, 32, 2});   // listed as distinct aggregates

    CHECK(hb::modular_spectrum(Real(1.0001, 128)).entries.empty());
    CHECK_THROWS_AS(hb::modular_spectrum(Real(0.5, 128)), std::domain_error);
}

TEST_CASE("monotone prefix property") {
    auto a = agg_of(hb::modular_spectrum(Real(50.0, 128)));
    auto b = agg_of(hb::modular_spectrum(Real(150.0, 128)));
    REQUIRE(a.size() <= b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("sweep is deterministic across thread counts") {
    auto one = hb::modular_spectrum(Real(400.0, 128), 1);
    auto four = hb::modular_spectrum(Real(400.0, 128), 4);
    std::ostringstream s1, s4;
    hb::export_csv(one, s1);
    hb::export_csv(four, s4);
    CHECK(s1.str() == s4.str());
}

TEST_CASE("csv shape") {
    auto s = hb::modular_spectrum(Real(25.0, 128));
    std::ostringstream out;
    hb::export_csv(s, out);
    CHECK(out.str() ==
          "6.854102,1,5,4.681668\n"
          "13.928203,2,12,7.753594\n"
          "22.956439,2,21,10.869650\n");

    std::ostringstream hdr;
    hb::export_csv(s, hdr, {2, true});
    CHECK(hdr.str() == "norm,multiplicity,discriminant,li\n6.85,1,5,4.68\n13.93,2,12,7.75\n"
                       "22.96,2,21,10.87\n");

    hb::LengthSpectrum empty;
    empty.x_max = Real(1.0001, 128);
    std::ostringstream e;
    hb::export_csv(empty, e);
    CHECK(e.str().empty());
}

TEST_CASE("quotient group orders, formula vs enumeration") {
    CHECK(hb::quotient_group(2).order == 6);
    CHECK(hb::quotient_group(3).order == 12);
    CHECK(hb::quotient_group(5).order == 60);
    CHECK_THROWS_AS(hb::quotient_group(1), std::domain_error);

    for (long N = 2; N <= 6; ++N) {
        long sl2 = 0;
        for (long a = 0; a < N; ++a)
            for (long b = 0; b < N; ++b)
                for (long c = 0; c < N; ++c)
                    for (long d = 0; d < N; ++d)
                        if (((a * d - b * c) % N + N) % N == 1 % N) ++sl2;
        long want = (N == 2) ? sl2 : sl2 / 2;  // -I = I only at N = 2
        CHECK(hb::quotient_group(N).order == want);
    }
}

TEST_CASE("element orders") {
    CHECK(hb::element_order({1, 1, 1, 2}, 2) == 3);
    CHECK(hb::element_order({1, 0, 0, 1}, 5) == 1);
    CHECK(hb::element_order({1, 1, 0, 1}, 3) == 3);
    CHECK(hb::element_order({-1, 0, 0, -1}, 5) == 1);  // -I is trivial in PSL
    CHECK_THROWS_AS(hb::element_order({1, 1, 1, 1}, 2), std::domain_error);  // det 0
}

TEST_CASE("split spectrum for level 2") {
    auto base = hb::modular_spectrum(Real(330.0, 128));
    auto split = hb::split_spectrum(base, 2, Real(330.0, 128));
    auto a = agg_of(split);

    // frozen from an independent sweep: (trace of rep^m, d, multiplicity)
    std::vector<Agg> want = {
        {6, 8, 6},  {10, 24, 12}, {14, 12, 6}, {14, 48, 12},
        {18, 5, 2}, {18, 20, 6},  {18, 80, 12},
    };
    REQUIRE(a.size() == want.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == want[i]);

    // splitting conservation: k * m = |G| for every class
    long G = hb::quotient_group(2).order;
    for (const auto& e : split.entries) {
        long m = hb::element_order(e.rep, 2);
        CHECK(e.exponent == m);
        CHECK(e.multiplicity * m == G);
        CHECK(e.norm(160) <= Real(330.0, 160));
    }

    // the norm-322 entry from d = 5 has order 3 and multiplicity 6/3 = 2
    bool found = false;
    for (const auto& e : split.entries)
        if (e.d == 5 && e.exponent == 3 && e.multiplicity == 2 && e.trace_pow == 18) found = true;
    CHECK(found);

    // classes whose power exceeds the bound are absent: d = 12 has order 2,
    // norm^2 = 193.99; with x_max = 100 it must vanish
    auto base100 = hb::modular_spectrum(Real(100.0, 128));
    auto split100 = hb::split_spectrum(base100, 2, Real(100.0, 128));
    for (const auto& e : split100.entries) CHECK_FALSE(e.d == 12);
    // while the order-1 class d = 8 stays, scaled by |G|
    bool d8 = false;
    for (const auto& e : split100.entries)
        if (e.d == 8 && e.exponent == 1 && e.multiplicity == 6) d8 = true;
    CHECK(d8);

    CHECK_THROWS_AS(hb::split_spectrum(base100, 2, Real(200.0, 128)), std::domain_error);
}

TEST_CASE("split spectrum for level 3") {
    auto base = hb::modular_spectrum(Real(700.0, 128));
    auto split = hb::split_spectrum(base, 3, Real(700.0, 128));
    auto a = agg_of(split);
    std::vector<Agg> want = {
        {7, 5, 6}, {11, 13, 12}, {16, 28, 24}, {20, 44, 24}, {25, 69, 24},
    };
    REQUIRE(a.size() == want.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == want[i]);
    long G = hb::quotient_group(3).order;
    for (const auto& e : split.entries)
        CHECK(e.multiplicity * hb::element_order(e.rep, 3) == G);
}

TEST_CASE("element order is independent of the representative within a cycle") {
    auto base = hb::modular_spectrum(Real(100.0, 128));
    for (long N : {2L, 3L, 5L}) {
        for (const auto& e : base.entries) {
            hb::PellSolution sol{e.d, e.t, e.u};
            long m0 = hb::element_order(e.rep, N);
            hb::QuadForm f = e.form;
            do {
                f = hb::rho(f);
                CHECK(hb::element_order(hb::form_to_matrix(f, sol), N) == m0);
            } while (!(f == e.form));
        }
    }
}

TEST_CASE("cross-oracle: brute-force conjugacy classes up to norm 50") {
    // Enumerate hyperbolic elements with entries bounded by 50 and trace in
    // (2, 7], i.e. norm <= 50; join conjugates under the two generators;
    // discard non-primitive classes (squares of trace-3 elements appear at
    // trace 7). Counts per trace must match the sweep.
    const int B = 50;
    std::map<std::array<int, 4>, int> id;
    std::vector<std::array<int, 4>> mats;
    auto norm_sign = [](std::array<int, 4> m) {
        if (m[0] + m[3] < 0) for (auto& v : m) v = -v;
        return m;
    };
    for (int a = -B; a <= B; ++a)
        for (int b = -B; b <= B; ++b)
            for (int c = -B; c <= B; ++c) {
                long long bc = 1LL + static_cast<long long>(b) * c;
                if (a == 0 || bc % a != 0) continue;
                long long d = bc / a;
                if (d < -B || d > B) continue;
                int tr = std::abs(a + static_cast<int>(d));
                if (tr <= 2 || tr > 7) continue;
                auto m = norm_sign({a, b, c, static_cast<int>(d)});
                if (!id.count(m)) {
                    id[m] = static_cast<int>(mats.size());
                    mats.push_back(m);
                }
            }
    std::vector<int> parent(mats.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    auto mul = [](std::array<int, 4> x, std::array<int, 4> y) {
        return std::array<int, 4>{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                                  x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    };
    const std::array<int, 4> T{1, 1, 0, 1}, Ti{1, -1, 0, 1}, S{0, -1, 1, 0}, Si{0, 1, -1, 0};
    for (size_t i = 0; i < mats.size(); ++i) {
        for (auto [g, gi] : {std::pair(T, Ti), std::pair(S, Si)}) {
            auto conj = norm_sign(mul(mul(g, mats[i]), gi));
            bool inbox = true;
            for (int v : conj) inbox = inbox && v >= -B && v <= B;
            if (!inbox) continue;
            auto it = id.find(conj);
            if (it != id.end()) unite(static_cast<int>(i), it->second);
        }
    }
    // squares of trace-3 matrices are the non-primitive classes at trace 7
    std::set<int> nonprimitive;
    for (size_t i = 0; i < mats.size(); ++i) {
        if (std::abs(mats[i][0] + mats[i][3]) != 3) continue;
        auto sq = norm_sign(mul(mats[i], mats[i]));
        auto it = id.find(sq);
        if (it != id.end()) nonprimitive.insert(find(it->second));
    }
    std::map<int, std::set<int>> classes_by_trace;  // |trace| -> roots
    for (size_t i = 0; i < mats.size(); ++i) {
        int root = find(static_cast<int>(i));
        if (nonprimitive.count(root)) continue;
        classes_by_trace[std::abs(mats[i][0] + mats[i][3])].insert(root);
    }

    auto sweep = hb::modular_spectrum(Real(50.0, 128));
    std::map<int, long> sweep_by_trace;
    for (const auto& e : sweep.entries)
        sweep_by_trace[e.trace_pow.convert_to<int>()] += e.multiplicity;

    REQUIRE(classes_by_trace.size() == sweep_by_trace.size());
    for (auto [tr, roots] : classes_by_trace) {
        CAPTURE(tr);
        CHECK(static_cast<long>(roots.size()) == sweep_by_trace[tr]);
    }
}
