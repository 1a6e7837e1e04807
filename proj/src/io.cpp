#include "dualdec/io.hpp"

#include <fstream>
#include <sstream>

#include "dualdec/errors.hpp"

namespace dualdec {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    throw ConfigInvalid(std::string("invalid hex digit '") + c + "'");
}

const char* kHexDigits = "0123456789abcdef";

std::string strip_0x(const std::string& s) {
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X'))
        return s.substr(2);
    return s;
}

} // namespace

std::string poly_to_hex(const CyclicPoly& p) {
    const int n = p.n();
    if (p.field().m() == 1) {
        // nibble-pack the bit vector, low coefficients in the low digits
        const int digits = (n + 3) / 4;
        std::string out(static_cast<std::size_t>(digits), '0');
        for (int d = 0; d < digits; ++d) {
            int nibble = 0;
            for (int b = 0; b < 4; ++b) {
                int i = 4 * d + b;
                if (i < n && p.coeff(i))
                    nibble |= 1 << b;
            }
            out[static_cast<std::size_t>(digits - 1 - d)] = kHexDigits[nibble];
        }
        return out;
    }
    const int width = (p.field().m() + 3) / 4;
    std::string out;
    out.reserve(static_cast<std::size_t>(n * width));
    for (int i = 0; i < n; ++i) {
        gf_elem v = p.coeff(i);
        for (int d = width - 1; d >= 0; --d)
            out.push_back(kHexDigits[(v >> (4 * d)) & 0xF]);
    }
    return out;
}

CyclicPoly poly_from_hex(const Field& field, int n, const std::string& hex_in) {
    std::string hex = strip_0x(hex_in);
    CyclicPoly p(field, n);
    if (field.m() == 1) {
        for (std::size_t d = 0; d < hex.size(); ++d) {
            int nibble = hex_digit(hex[hex.size() - 1 - d]);
            for (int b = 0; b < 4; ++b) {
                int i = static_cast<int>(4 * d) + b;
                if (nibble & (1 << b)) {
                    if (i >= n)
                        throw ConfigInvalid("hex word longer than the ring length");
                    p.set_coeff(i, 1);
                }
            }
        }
        return p;
    }
    const int width = (field.m() + 3) / 4;
    if (static_cast<int>(hex.size()) != n * width)
        throw ConfigInvalid("expected " + std::to_string(n * width) + " hex digits");
    for (int i = 0; i < n; ++i) {
        gf_elem v = 0;
        for (int d = 0; d < width; ++d)
            v = static_cast<gf_elem>((v << 4) | hex_digit(hex[static_cast<std::size_t>(i * width + d)]));
        if (v > field.order())
            throw ConfigInvalid("symbol value outside the field");
        p.set_coeff(i, v);
    }
    return p;
}

std::string poly_to_text(const CyclicPoly& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    auto supp = p.support();
    for (auto it = supp.rbegin(); it != supp.rend(); ++it) {
        if (!first)
            out << "+";
        first = false;
        int i = *it;
        gf_elem c = p.coeff(i);
        if (c != 1)
            out << "a^" << p.field().log(c) << (i > 0 ? "*" : "");
        if (i == 0) {
            if (c == 1)
                out << "1";
        } else if (i == 1) {
            out << "x";
        } else {
            out << "x^" << i;
        }
    }
    return out.str();
}

CyclicPoly poly_from_text(const Field& field, int n, const std::string& text) {
    CyclicPoly p(field, n);
    std::string term;
    std::string cleaned;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            cleaned.push_back(c);
    if (cleaned == "0")
        return p;
    std::istringstream stream(cleaned);
    while (std::getline(stream, term, '+')) {
        if (term.empty())
            throw ConfigInvalid("empty term in polynomial text");
        gf_elem coeff = 1;
        std::string rest = term;
        auto star = term.find('*');
        if (star != std::string::npos) {
            std::string c = term.substr(0, star);
            rest = term.substr(star + 1);
            if (c.rfind("a^", 0) == 0)
                coeff = field.exp(std::stoll(c.substr(2)));
            else
                coeff = static_cast<gf_elem>(std::stoul(c));
        } else if (term.rfind("a^", 0) == 0) {
            coeff = field.exp(std::stoll(term.substr(2)));
            rest = "1";
        }
        int degree;
        if (rest == "1")
            degree = 0;
        else if (rest == "x")
            degree = 1;
        else if (rest.rfind("x^", 0) == 0)
            degree = std::stoi(rest.substr(2));
        else
            throw ConfigInvalid("cannot parse polynomial term: " + term);
        if (degree < 0 || degree >= n)
            throw ConfigInvalid("term degree outside the ring");
        p.set_coeff(degree, p.coeff(degree) ^ coeff);
    }
    return p;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = kHexDigits[h & 0xF];
        h >>= 4;
    }
    return out;
}

std::string hash_file(const std::string& path) { return fnv1a_hex(read_text_file(path)); }

nlohmann::json code_spec_to_json(const CodeSpec& spec) {
    nlohmann::json j;
    j["family"] = family_name(spec.family);
    j["m"] = spec.locator_field->m();
    char buffer[16];
    std::snprintf(buffer, sizeof buffer, "0x%X", spec.locator_field->primitive_poly());
    j["primitive_poly"] = buffer;
    j["n"] = spec.n;
    j["k"] = spec.k;
    if (spec.family == CodeFamily::PuncturedRM)
        j["rm"] = {{"r", spec.rm_r}, {"m", spec.rm_m}};
    if (!spec.coset_reps.empty())
        j["coset_reps"] = spec.coset_reps;
    return j;
}

CodeSpec code_spec_from_json(const nlohmann::json& j) {
    const CodeFamily family = family_from_name(j.at("family").get<std::string>());
    const int m = j.at("m").get<int>();
    std::uint32_t poly = default_primitive_poly(m);
    if (j.contains("primitive_poly")) {
        const auto& pp = j.at("primitive_poly");
        if (pp.is_string())
            poly = static_cast<std::uint32_t>(std::stoul(strip_0x(pp.get<std::string>()), nullptr, 16));
        else
            poly = pp.get<std::uint32_t>();
    }
    auto field = make_field_shared(m, poly);
    const int n = j.contains("n") ? j.at("n").get<int>() : field->order();
    if (n != field->order())
        throw ConfigInvalid("code length must be 2^m - 1");

    CodeSpec spec = [&]() {
        switch (family) {
        case CodeFamily::RS:
            return rs_code(field, n, j.at("k").get<int>());
        case CodeFamily::BCH:
            return bch_code(field, n, j.at("coset_reps").get<std::vector<int>>());
        case CodeFamily::PuncturedRM: {
            const auto& rm = j.at("rm");
            return punctured_rm_code(rm.at("r").get<int>(), rm.at("m").get<int>(), field);
        }
        }
        throw ConfigInvalid("unknown family");
    }();
    if (j.contains("k") && j.at("k").get<int>() != spec.k)
        throw ConfigInvalid("declared dimension " + std::to_string(j.at("k").get<int>()) +
                            " does not match the construction (k = " + std::to_string(spec.k) + ")");
    return spec;
}

CodeSpec load_code_spec_file(const std::string& path) {
    return code_spec_from_json(nlohmann::json::parse(read_text_file(path)));
}

nlohmann::json checks_to_json(const DualCheckSet& checks, const std::string& spec_hash,
                              std::uint64_t seed) {
    nlohmann::json j;
    j["meta"] = {{"version", kVersion}, {"spec_hash", spec_hash}, {"seed", seed}};
    j["n"] = checks.n;
    j["m"] = checks.field->m();
    j["weight"] = checks.weight;
    j["count"] = checks.count();
    nlohmann::json list = nlohmann::json::array();
    for (const DualCheck& check : checks.checks) {
        nlohmann::json entry;
        entry["support"] = check.support;
        entry["coeffs"] = check.coeffs;
        list.push_back(std::move(entry));
    }
    j["checks"] = std::move(list);
    return j;
}

DualCheckSet checks_from_json(const nlohmann::json& j, const CodeSpec& spec) {
    if (j.at("n").get<int>() != spec.n)
        throw ConfigInvalid("check set length does not match the code");
    if (j.at("m").get<int>() != spec.symbol_field->m())
        throw ConfigInvalid("check set symbol field does not match the code");
    std::vector<CyclicPoly> polys;
    for (const auto& entry : j.at("checks")) {
        auto support = entry.at("support").get<std::vector<int>>();
        auto coeffs = entry.at("coeffs").get<std::vector<gf_elem>>();
        if (support.size() != coeffs.size())
            throw ConfigInvalid("check support/coefficient size mismatch");
        CyclicPoly p(*spec.symbol_field, spec.n);
        for (std::size_t i = 0; i < support.size(); ++i)
            p.set_coeff(support[i], coeffs[i]);
        polys.push_back(std::move(p));
    }
    DualCheckSet checks = checks_from_polys(spec, polys);
    if (j.contains("count") && j.at("count").get<int>() != checks.count())
        throw ConfigInvalid("check count field disagrees with the list");
    if (j.at("weight").get<int>() != checks.weight)
        throw ConfigInvalid("check weight field disagrees with the list");
    return checks;
}

DualCheckSet load_checks_file(const std::string& path, const CodeSpec& spec) {
    return checks_from_json(nlohmann::json::parse(read_text_file(path)), spec);
}

void save_checks_file(const std::string& path, const DualCheckSet& checks,
                      const std::string& spec_hash, std::uint64_t seed) {
    write_text_file(path, checks_to_json(checks, spec_hash, seed).dump(2) + "\n");
}

nlohmann::json report_to_json(const DecodeReport& report) {
    nlohmann::json j;
    switch (report.status) {
    case DecodeStatus::Corrected: j["status"] = "corrected"; break;
    case DecodeStatus::Failed: j["status"] = "failed"; break;
    case DecodeStatus::Ambiguous: j["status"] = "ambiguous"; break;
    }
    j["iterations"] = report.iterations;
    j["codeword"] = report.codeword ? nlohmann::json(poly_to_hex(*report.codeword))
                                    : nlohmann::json(nullptr);
    j["error"] = report.error ? nlohmann::json(poly_to_hex(*report.error)) : nlohmann::json(nullptr);
    nlohmann::json flips = nlohmann::json::array();
    for (const Flip& f : report.flips)
        flips.push_back({f.position, f.value});
    j["flips"] = std::move(flips);
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigInvalid("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigInvalid("cannot write " + path);
    out << content;
    if (!out)
        throw ConfigInvalid("failed while writing " + path);
}

} // namespace dualdec
