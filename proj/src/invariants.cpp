#include "huberbound/invariants.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hb {

FundamentalInvariants psl2z_preset(long prec) {
    FundamentalInvariants inv;
    inv.tau = 1;
    inv.area = Real::pi(prec) / Real(3.0, prec);
    inv.Y = Real(2.0, prec);
    inv.diameters = {Real(1.15, prec)};
    inv.elliptic = {{2, Real::pi(prec) / Real(2.0, prec)},
                    {3, Real::pi(prec) / Real(3.0, prec)}};
    inv.A = 1;
    inv.s1 = Real::pos_infinity(prec);
    inv.small_s = {Real(1.0, prec)};
    inv.N_sc = 1;
    inv.sigma_N = Real(1.0, prec);
    inv.c1 = Real(1.0, prec);
    inv.c = Real::from_string("6.85", prec);
    inv.B_override = Real(753.0, prec);
    return inv;
}

namespace {

std::vector<std::string> split_csv(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

}  // namespace

FundamentalInvariants parse_invariants(const std::string& text, long prec) {
    std::map<std::string, std::string> kv;
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
        if (!key.empty()) kv[key] = val;
    }

    FundamentalInvariants inv;
    inv.small_s = {Real(1.0, prec)};
    auto real_of = [prec](const std::string& v) {
        if (v == "inf" || v == "+inf") return Real::pos_infinity(prec);
        return Real::from_string(v, prec);
    };
    std::vector<std::string> em, eth;
    for (const auto& [key, val] : kv) {
        if (key == "tau") inv.tau = std::stoi(val);
        else if (key == "area") inv.area = real_of(val);
        else if (key == "Y") inv.Y = real_of(val);
        else if (key == "diameters") {
            inv.diameters.clear();
            for (const auto& x : split_csv(val)) inv.diameters.push_back(real_of(x));
        } else if (key == "diameter_cocompact") inv.diameter_cocompact = real_of(val);
        else if (key == "elliptic_m") em = split_csv(val);
        else if (key == "elliptic_theta") eth = split_csv(val);
        else if (key == "A") inv.A = std::stoi(val);
        else if (key == "s1") inv.s1 = real_of(val);
        else if (key == "small_s") {
            inv.small_s.clear();
            for (const auto& x : split_csv(val)) inv.small_s.push_back(real_of(x));
        } else if (key == "N_sc") inv.N_sc = std::stoi(val);
        else if (key == "sigma_N") inv.sigma_N = real_of(val);
        else if (key == "c1") inv.c1 = real_of(val);
        else if (key == "c") inv.c = real_of(val);
        else if (key == "B_override") inv.B_override = real_of(val);
        else throw std::invalid_argument("unknown invariants key: " + key);
    }
    if (em.size() != eth.size())
        throw std::invalid_argument("elliptic_m and elliptic_theta must have equal length");
    for (size_t i = 0; i < em.size(); ++i)
        inv.elliptic.push_back({std::stoi(em[i]), real_of(eth[i])});
    return inv;
}

FundamentalInvariants load_invariants(const std::string& path, long prec) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open invariants file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_invariants(buf.str(), prec);
}

}  // namespace hb
