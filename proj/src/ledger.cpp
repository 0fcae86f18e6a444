#include "huberbound/ledger.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace hb {

Real compute_B_cofinite(const Real& Y, const std::vector<Real>& diameters) {
    if (diameters.empty() || diameters.size() > 2)
        throw std::domain_error("compute_B_cofinite: need 1 or 2 cusp-sector diameters");
    long prec = Y.precision();
    Real sum(0.0, prec);
    for (const auto& dj : diameters) sum += exp(Real(2.0, prec) * dj);
    return Real(4.0, prec) * Real::pi(prec) * Y * (Y + Real(1.0, prec)) * sum;
}

Real compute_B_cocompact(const Real& diameter, const Real& area) {
    long prec = diameter.precision();
    return Real(2.0, prec) * Real::pi(prec) * exp(diameter) / area;
}

namespace {

struct Ctx {
    long prec;
    Real pi, e, ln2;
};

Real elliptic_weight_sum(const FundamentalInvariants& inv, const Ctx& cx) {
    Real sum(0.0, cx.prec);
    for (const auto& R : inv.elliptic)
        sum += Real(1.0, cx.prec) / (Real(2.0 * R.m_R, cx.prec) * sin(R.theta_R));
    return sum;
}

Real elliptic_c4_sum(const FundamentalInvariants& inv, const Ctx& cx) {
    Real sum(0.0, cx.prec);
    Real half(0.5, cx.prec);
    for (const auto& R : inv.elliptic) {
        Real w = Real(1.0, cx.prec) / (Real(2.0 * R.m_R, cx.prec) * sin(R.theta_R));
        sum += w * (half / R.theta_R + half / (cx.pi - R.theta_R));
    }
    return Real(5.0, cx.prec) * sum;
}

void echo_inputs(const FundamentalInvariants& inv, const Ctx& cx, ConstantLedger& led) {
    auto put = [&](const char* k, const Real& v) { led.inputs.emplace_back(k, v.str_sig(20)); };
    led.inputs.emplace_back("tau", std::to_string(inv.tau));
    put("area", inv.area);
    led.inputs.emplace_back("A", std::to_string(inv.A));
    put("s1", inv.s1);
    put("c", inv.c);
    if (led.mode == LedgerMode::kCofinite) {
        put("Y", inv.Y);
        put("c1", inv.c1);
        led.inputs.emplace_back("N_sc", std::to_string(inv.N_sc));
        if (inv.N_sc > 0) put("sigma_N", inv.sigma_N);
        for (const auto& R : inv.elliptic)
            led.inputs.emplace_back("elliptic (m, theta)",
                                    std::to_string(R.m_R) + ", " + R.theta_R.str_sig(20));
    } else if (inv.diameter_cocompact) {
        put("diameter", *inv.diameter_cocompact);
    }
    (void)cx;
}

// shared C12 .. Cu tail (identical in both tables)
void eval_tail(const FundamentalInvariants& inv, const Ctx& cx, ConstantLedger& led) {
    const Real one(1.0, cx.prec), two(2.0, cx.prec), four(4.0, cx.prec);
    const Real C1 = two * cx.e - two;
    const Real A(static_cast<long>(inv.A), cx.prec);
    const Real C = led.at("C");

    Real small_term(0.0, cx.prec);
    if (inv.A > 1) {
        if (inv.s1.is_inf())
            throw std::domain_error("ledger: A > 1 requires a finite s1");
        if (inv.s1 == one)
            throw std::domain_error("ledger: s1 = 1 with A > 1 divides by zero");
        small_term = (A - one) * (one + Real(3.0, cx.prec) * C1 + two / (one - inv.s1) * (one + C1));
    }
    const Real C12 = small_term + two * C1 + two;
    const Real C10 = Real(8480.0, cx.prec) * sqrt(cx.e / (two * cx.pi));
    const Real C13 = Real(41.0, cx.prec) / Real(6.0, cx.prec) * C * C10;

    Real C16 = C12 + C13 + Real(3.0, cx.prec) / (two * cx.pi) * inv.area * C10;
    if (led.mode == LedgerMode::kCofinite) {
        const Real tau(static_cast<long>(inv.tau), cx.prec);
        const Real C14 = C10 * Real(296.0, cx.prec) * tau / (Real(3.0, cx.prec) * cx.pi) +
                         C10 * tau / two + two * tau * cx.ln2;
        const Real C15 =
            Real(56.0, cx.prec) * C10 / Real(3.0, cx.prec) * abs(elliptic_weight_sum(inv, cx));
        C16 += C14 + C15;
        led.slots.emplace("C14", C14);
        led.slots.emplace("C15", C15);
    }
    const Real C17 = four * A + four * C16;
    const Real C18 = four * A + Real(5.0, cx.prec) * C16;

    const Real& c = inv.c;
    if (!(c > one)) throw std::domain_error("ledger: c must exceed 1");
    const Real mu = log(c);
    const Real C19 = C18 + (Real(8.0, cx.prec) * A + four * C18) / (one - one / c);
    const Real C20 = C19 + (Real(8.0, cx.prec) * A + four * C18) / mu;
    const Real C21 = abs(c - two) / cx.ln2 + abs(two - sqrt(c)) * two / mu;
    const Real C22 = one / (one - one / cx.ln2);
    const Real Cu = C21 * A + C20 * pow(c, Real(0.75, cx.prec)) / mu + C20 + C20 * C22 +
                    Real(0.75, cx.prec) * C20 * C21;

    led.slots.emplace("C1", C1);
    led.slots.emplace("C10", C10);
    led.slots.emplace("C12", C12);
    led.slots.emplace("C13", C13);
    led.slots.emplace("C16", C16);
    led.slots.emplace("C17", C17);
    led.slots.emplace("C18", C18);
    led.slots.emplace("C19", C19);
    led.slots.emplace("C20", C20);
    led.slots.emplace("C21", C21);
    led.slots.emplace("C22", C22);
    led.slots.emplace("Cu", Cu);
    led.slots.emplace("mu", mu);
}

Ctx make_ctx(const FundamentalInvariants& inv, const LedgerOptions& opts) {
    long prec = opts.prec > 0
                    ? opts.prec
                    : std::max({long{128}, Real::default_precision(), inv.area.precision()});
    return {prec, Real::pi(prec), Real::e(prec), Real::ln2(prec)};
}

}  // namespace

ConstantLedger cocompact_ledger(const FundamentalInvariants& inv, const LedgerOptions& opts) {
    Ctx cx = make_ctx(inv, opts);
    if (inv.tau != 0 || !inv.elliptic.empty())
        throw std::domain_error("cocompact_ledger: requires tau = 0 and no elliptic classes");
    ConstantLedger led;
    led.mode = LedgerMode::kCocompact;
    Real B(cx.prec);
    if (inv.B_override) {
        B = *inv.B_override;
        led.b_source = "override";
    } else {
        if (!inv.diameter_cocompact)
            throw std::domain_error("cocompact_ledger: missing fundamental-domain diameter");
        B = compute_B_cocompact(*inv.diameter_cocompact, inv.area);
        led.b_source = "computed";
    }
    Real C = Real(3.0, cx.prec) * (inv.area / (Real(4.0, cx.prec) * cx.pi) + Real(745.0, cx.prec) * B);
    if (opts.C_override) C = *opts.C_override;
    led.slots.emplace("B", B);
    led.slots.emplace("C", C);
    eval_tail(inv, cx, led);
    echo_inputs(inv, cx, led);
    return led;
}

ConstantLedger cofinite_ledger(const FundamentalInvariants& inv, const LedgerOptions& opts) {
    Ctx cx = make_ctx(inv, opts);
    ConstantLedger led;
    led.mode = LedgerMode::kCofinite;
    const Real one(1.0, cx.prec), two(2.0, cx.prec), four(4.0, cx.prec);
    Real B(cx.prec);
    if (inv.B_override) {
        B = *inv.B_override;
        led.b_source = "override";
    } else {
        B = compute_B_cofinite(inv.Y, inv.diameters);
        led.b_source = "computed";
    }
    if (!(inv.c1 > Real(0.0, cx.prec))) throw std::domain_error("cofinite_ledger: c1 must be > 0");

    const Real tau(static_cast<long>(inv.tau), cx.prec);
    const Real C3 = Real(8.0, cx.prec) * tau;
    const Real C4 = elliptic_c4_sum(inv, cx);
    const Real C5 = C3 + C4 + inv.area / (four * cx.pi) + Real(745.0, cx.prec) * B;
    Real scat = two * abs(log(inv.c1));
    if (inv.N_sc > 0) {
        Real half(0.5, cx.prec);
        if (!(inv.sigma_N > half))
            throw std::domain_error("cofinite_ledger: sigma_N must lie in (1/2, 1]");
        scat += Real(static_cast<long>(inv.N_sc), cx.prec) / ((inv.sigma_N - half) * (inv.sigma_N - half));
    }
    const Real C6 = C5 + scat * sqrt(Real(5.0, cx.prec)) / sqrt(Real(16.0, cx.prec) * cx.pi);
    const Real C7 = Real(8.0, cx.prec) / (four * cx.pi) * scat;
    Real C = Real(3.0, cx.prec) * C6 + C7;
    if (opts.C_override) C = *opts.C_override;

    led.slots.emplace("B", B);
    led.slots.emplace("C3", C3);
    led.slots.emplace("C4", C4);
    led.slots.emplace("C5", C5);
    led.slots.emplace("C6", C6);
    led.slots.emplace("C7", C7);
    led.slots.emplace("C", C);
    eval_tail(inv, cx, led);
    echo_inputs(inv, cx, led);
    return led;
}

namespace {

struct SlotDoc {
    const char* name;
    const char* formula;
};

const std::vector<SlotDoc>& slot_docs() {
    static const std::vector<SlotDoc> docs = {
        {"B", "trivial counting constant (computed or override)"},
        {"C1", "2e - 2"},
        {"C3", "8 tau"},
        {"C4", "5 sum_R 1/(2 m_R sin theta_R) (1/(2 theta_R) + 1/(2(pi - theta_R)))"},
        {"C5", "8 tau + C4 + |F|/(4 pi) + 745 B"},
        {"C6", "C5 + (2|log c1| + N/(sigma_N - 1/2)^2) sqrt(5)/sqrt(16 pi)"},
        {"C7", "(8/(4 pi)) (2|log c1| + N/(sigma_N - 1/2)^2)"},
        {"C", "3 C6 + C7 (cofinite) | 3(|F|/(4 pi) + 745 B) (cocompact)"},
        {"C10", "8480 sqrt(e/(2 pi))"},
        {"C12", "(A-1)(1 + 3 C1 + 2/(1-s1) (1 + C1)) + 2 C1 + 2"},
        {"C13", "(41/6) C C10"},
        {"C14", "C10 296 tau/(3 pi) + C10 tau/2 + 2 tau log 2"},
        {"C15", "(56 C10/3) |sum_R 1/(2 m_R sin theta_R)|"},
        {"C16", "C12 + C13 [+ C14 + C15] + (3/(2 pi)) |F| C10"},
        {"C17", "4 A + 4 C16"},
        {"C18", "4 A + 5 C16"},
        {"C19", "C18 + (8 A + 4 C18)/(1 - 1/c)"},
        {"C20", "C19 + (8 A + 4 C18)/mu"},
        {"C21", "|c-2|/log 2 + |2-sqrt(c)| 2/log c"},
        {"C22", "1/(1 - 1/log 2)"},
        {"Cu", "C21 A + C20 c^{3/4}/log c + C20 + C20 C22 + (3/4) C20 C21"},
        {"mu", "log c"},
    };
    return docs;
}

}  // namespace

std::string ledger_report(const ConstantLedger& ledger) {
    std::ostringstream out;
    out << "# mode = " << (ledger.mode == LedgerMode::kCocompact ? "cocompact" : "cofinite")
        << "\n# B source = " << ledger.b_source << "\n";
    for (const auto& [k, v] : ledger.inputs) out << "# input " << k << " = " << v << "\n";
    for (const auto& doc : slot_docs()) {
        auto it = ledger.slots.find(doc.name);
        if (it == ledger.slots.end()) continue;
        out << doc.name << " = " << it->second.str_sig(20) << "  # " << doc.formula << "\n";
    }
    return out.str();
}

std::map<std::string, Real> parse_ledger_report(const std::string& text, long prec) {
    std::map<std::string, Real> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) continue;
        out.emplace(key, Real::from_string(val, prec));
    }
    return out;
}

}  // namespace hb
