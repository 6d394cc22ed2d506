#include "galrank/io.hpp"

#include <cctype>

namespace galrank {

using nlohmann::json;

json tower_params_to_json(const TowerParams& params) {
    json j;
    j["p"] = params.p;
    j["r"] = params.r;
    j["s"] = params.s;
    j["m"] = params.m;
    j["modulus_R"] = params.modulus_R;
    j["modulus_S"] = params.modulus_S;
    return j;
}

TowerParams tower_params_from_json(const json& j) {
    TowerParams p;
    p.p = j.at("p").get<std::uint64_t>();
    p.r = j.at("r").get<unsigned>();
    p.s = j.at("s").get<unsigned>();
    p.m = j.at("m").get<unsigned>();
    p.modulus_R = j.at("modulus_R").get<std::vector<std::uint64_t>>();
    p.modulus_S = j.at("modulus_S").get<std::vector<std::vector<std::uint64_t>>>();
    return p;
}

json element_to_json(const GaloisTower& tower, const RingElement& e) {
    const unsigned s = tower.params().s;
    switch (e.level()) {
        case Level::base: return e.coeffs()[0];
        case Level::R: return std::vector<std::uint64_t>(e.coeffs().begin(), e.coeffs().end());
        case Level::S: {
            json out = json::array();
            for (unsigned i = 0; i < tower.params().m; ++i)
                out.push_back(std::vector<std::uint64_t>(
                    e.coeffs().begin() + static_cast<std::ptrdiff_t>(i) * s,
                    e.coeffs().begin() + static_cast<std::ptrdiff_t>(i + 1) * s));
            return out;
        }
    }
    throw ring_error("element_to_json: bad level");
}

RingElement element_from_json(const GaloisTower& tower, Level level, const json& j) {
    switch (level) {
        case Level::base:
            if (!j.is_number_unsigned() && !j.is_number_integer())
                throw ring_error("element: expected an integer");
            return tower.from_int(Level::base, j.get<std::uint64_t>());
        case Level::R: {
            auto v = j.get<std::vector<std::uint64_t>>();
            if (v.size() != tower.params().s)
                throw ring_error("element: expected s coefficients");
            return tower.element(Level::R, std::move(v));
        }
        case Level::S: {
            if (!j.is_array() || j.size() != tower.params().m)
                throw ring_error("element: expected m coefficient arrays");
            std::vector<std::uint64_t> flat;
            flat.reserve(tower.words(Level::S));
            for (const auto& cj : j) {
                auto v = cj.get<std::vector<std::uint64_t>>();
                if (v.size() != tower.params().s)
                    throw ring_error("element: expected s coefficients");
                flat.insert(flat.end(), v.begin(), v.end());
            }
            return tower.element(Level::S, std::move(flat));
        }
    }
    throw ring_error("element_from_json: bad level");
}

json vector_to_json(const GaloisTower& tower, std::span<const RingElement> v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(element_to_json(tower, e));
    return out;
}

std::vector<RingElement> vector_from_json(const GaloisTower& tower, Level level,
                                          const json& j) {
    if (!j.is_array()) throw ring_error("vector: expected an array");
    std::vector<RingElement> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(element_from_json(tower, level, e));
    return out;
}

json poly_to_json(const SkewPoly& f) {
    if (f.tower() == nullptr) return json::array();
    return vector_to_json(*f.tower(), f.coeffs());
}

SkewPoly poly_from_json(const GaloisTower& tower, const json& j) {
    return SkewPoly(&tower, vector_from_json(tower, Level::S, j));
}

json code_config_to_json(const CodeConfig& config) {
    json j;
    j["params"] = tower_params_to_json(config.params);
    j["k"] = config.k;
    j["n"] = config.n;
    j["g"] = config.auto_support ? json("auto") : config.explicit_support;
    return j;
}

CodeConfig code_config_from_json(const json& j) {
    CodeConfig c;
    c.params = tower_params_from_json(j.at("params"));
    c.k = j.at("k").get<unsigned>();
    const auto& g = j.at("g");
    if (g.is_string()) {
        if (g.get<std::string>() != "auto")
            throw ring_error("config: g must be \"auto\" or an element array");
        c.auto_support = true;
        c.n = j.at("n").get<unsigned>();
    } else {
        c.auto_support = false;
        c.explicit_support = g;
        c.n = static_cast<unsigned>(g.size());
        if (j.contains("n") && j.at("n").get<unsigned>() != c.n)
            throw ring_error("config: n does not match the support length");
    }
    return c;
}

LoadedCode load_code(const CodeConfig& config) {
    LoadedCode out;
    out.tower = std::make_unique<GaloisTower>(config.params);
    std::vector<RingElement> support =
        config.auto_support
            ? GabidulinCode::power_basis_support(*out.tower, config.n)
            : vector_from_json(*out.tower, Level::S, config.explicit_support);
    out.code = std::make_unique<GabidulinCode>(*out.tower, std::move(support), config.k);
    return out;
}

RankProfile parse_profile(const std::string& text, unsigned r) {
    RankProfile profile;
    profile.counts.assign(r, 0);
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw ring_error("profile: empty string");
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        if (!first) {
            if (text[i] != '+') throw ring_error("profile: expected '+'");
            ++i;
            skip_ws();
        }
        first = false;
        unsigned long coef = 1;
        bool have_coef = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coef = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                coef = coef * 10 + static_cast<unsigned long>(text[i++] - '0');
            have_coef = true;
        }
        unsigned long exp = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw ring_error("profile: expected exponent");
                exp = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    exp = exp * 10 + static_cast<unsigned long>(text[i++] - '0');
            }
        } else if (!have_coef) {
            throw ring_error("profile: expected a term");
        }
        if (exp >= r) throw ring_error("profile: exponent exceeds nilpotency - 1");
        profile.counts[exp] += static_cast<unsigned>(coef);
        skip_ws();
    }
    return profile;
}

namespace {

unsigned bits_per_coeff(const GaloisTower& tower) {
    const std::uint64_t q0 = tower.characteristic_mod();
    unsigned b = 0;
    while ((std::uint64_t{1} << (b + 1)) <= q0) ++b;
    return b;  // floor(log2 q0) >= 1
}

}  // namespace

unsigned raw_capacity_bytes(const GaloisTower& tower, unsigned k) {
    const unsigned slots = k * tower.words(Level::S);
    return slots * bits_per_coeff(tower) / 8;
}

std::vector<RingElement> pack_bytes(const GaloisTower& tower,
                                    std::span<const std::uint8_t> bytes, unsigned k) {
    const unsigned bpc = bits_per_coeff(tower);
    const unsigned slots = k * tower.words(Level::S);
    if (bytes.size() > raw_capacity_bytes(tower, k))
        throw ring_error("pack_bytes: message exceeds capacity");
    std::vector<std::uint64_t> flat(slots, 0);
    std::size_t bit = 0;
    const std::size_t total_bits = bytes.size() * 8;
    for (unsigned slot = 0; slot < slots; ++slot) {
        std::uint64_t v = 0;
        for (unsigned b = 0; b < bpc && bit < total_bits; ++b, ++bit)
            if (bytes[bit / 8] & (1u << (bit % 8))) v |= std::uint64_t{1} << b;
        flat[slot] = v;
    }
    std::vector<RingElement> out;
    out.reserve(k);
    const unsigned w = tower.words(Level::S);
    for (unsigned i = 0; i < k; ++i)
        out.push_back(tower.element(
            Level::S, std::vector<std::uint64_t>(flat.begin() + static_cast<std::ptrdiff_t>(i) * w,
                                                 flat.begin() +
                                                     static_cast<std::ptrdiff_t>(i + 1) * w)));
    return out;
}

std::vector<std::uint8_t> unpack_bytes(const GaloisTower& tower,
                                       std::span<const RingElement> message) {
    const unsigned bpc = bits_per_coeff(tower);
    std::vector<std::uint8_t> bytes((message.size() * tower.words(Level::S) * bpc) / 8, 0);
    std::size_t bit = 0;
    const std::size_t total_bits = bytes.size() * 8;
    for (const auto& e : message) {
        for (auto w : e.coeffs()) {
            if (w >> bpc)
                throw ring_error("unpack_bytes: coefficient not byte-packable");
            for (unsigned b = 0; b < bpc; ++b, ++bit) {
                if (bit >= total_bits) break;
                if (w & (std::uint64_t{1} << b)) bytes[bit / 8] |= 1u << (bit % 8);
            }
        }
    }
    return bytes;
}

}  // namespace galrank
