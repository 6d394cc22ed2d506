// Command line front end: parameter generation, encode/decode of message
// files, Monte-Carlo channel simulation and complexity benchmarking.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 decoding failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "galrank/decoder.hpp"
#include "galrank/io.hpp"

namespace {

using namespace galrank;
using nlohmann::json;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(trial + 1)));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << data;
}

json parse_json(const std::string& text) {
    return json::parse(text);  // throws json::parse_error
}

CodeConfig load_config_file(const std::string& path) {
    return code_config_from_json(parse_json(read_file(path)));
}

struct OutputSink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            if (!file) throw std::runtime_error("cannot open " + path + " for writing");
            os = &file;
        }
    }
};

SkewPoly random_message(const GabidulinCode& code, std::mt19937_64& rng) {
    std::vector<RingElement> c;
    c.reserve(code.dimension());
    for (unsigned i = 0; i < code.dimension(); ++i)
        c.push_back(code.tower().random_element(Level::S, rng));
    return SkewPoly(&code.tower(), std::move(c));
}

int cmd_params(std::uint64_t p, unsigned r, unsigned s, unsigned m, unsigned n,
               unsigned k, const std::string& out_path) {
    if (n > m) {
        std::cerr << "error: n must not exceed m (support entries cannot stay "
                     "independent)\n";
        return 1;
    }
    if (k == 0 || k > n) {
        std::cerr << "error: need 0 < k <= n\n";
        return 1;
    }
    CodeConfig config;
    config.params = GaloisTower::auto_params(p, r, s, m);
    config.k = k;
    config.n = n;
    config.auto_support = true;
    load_code(config);  // validates the full construction
    const std::string text = code_config_to_json(config).dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

int cmd_encode(const std::string& config_path, const std::string& in_path,
               const std::string& out_path, bool raw) {
    auto loaded = load_code(load_config_file(config_path));
    const GaloisTower& t = *loaded.tower;
    std::vector<RingElement> message;
    if (raw) {
        const std::string bytes = read_file(in_path);
        message = pack_bytes(
            t, std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()),
            loaded.code->dimension());
    } else {
        message = vector_from_json(t, Level::S, parse_json(read_file(in_path)));
        if (message.size() != loaded.code->dimension())
            throw std::runtime_error("message must have k coefficients");
    }
    const auto codeword = loaded.code->encode(SkewPoly(&t, std::move(message)));
    write_file(out_path, vector_to_json(t, codeword).dump() + "\n");
    return 0;
}

int cmd_decode(const std::string& config_path, const std::string& in_path,
               const std::string& out_path, bool raw, bool trace) {
    auto loaded = load_code(load_config_file(config_path));
    const GaloisTower& t = *loaded.tower;
    const auto word = vector_from_json(t, Level::S, parse_json(read_file(in_path)));
    if (word.size() != loaded.code->length())
        throw std::runtime_error("word must have n coordinates");
    BfOptions options;
    if (trace) options.trace = &std::cerr;
    const DecodeResult res = decode(*loaded.code, word, options);
    if (!res.success()) {
        std::cerr << "decoding failure: lambda_degree=" << res.diagnostics.lambda_degree
                  << " residual_zero=" << res.diagnostics.residual_zero
                  << " degree_ok=" << res.diagnostics.degree_ok
                  << " within_radius=" << res.diagnostics.within_radius << "\n";
        return 2;
    }
    std::vector<RingElement> message(res.message->coeffs().begin(),
                                     res.message->coeffs().end());
    message.resize(loaded.code->dimension(), t.zero(Level::S));
    if (raw) {
        const auto bytes = unpack_bytes(t, message);
        write_file(out_path,
                   std::string(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
    } else {
        write_file(out_path, vector_to_json(t, message).dump() + "\n");
    }
    return 0;
}

int cmd_simulate(const std::string& config_path, unsigned trials, int rank_opt,
                 const std::string& profile_opt, std::uint64_t seed,
                 const std::string& decoder, const std::string& out_path, bool trace) {
    auto loaded = load_code(load_config_file(config_path));
    const GaloisTower& t = *loaded.tower;
    const GabidulinCode& code = *loaded.code;

    RankProfile profile;
    if (!profile_opt.empty())
        profile = parse_profile(profile_opt, t.nilpotency());
    else {
        profile.counts.assign(t.nilpotency(), 0);
        profile.counts[0] = rank_opt < 0 ? 0 : static_cast<unsigned>(rank_opt);
    }
    const unsigned rank = profile.rank();
    if (rank > std::min(code.length(), t.params().m))
        throw std::runtime_error("profile not realizable for this code");

    const bool run_fast = decoder == "fast" || decoder == "both";
    const bool run_wb = decoder == "wb" || decoder == "both";
    if (!run_fast && !run_wb) throw std::runtime_error("decoder must be fast, wb or both");

    BfOptions options;
    if (trace) options.trace = &std::cerr;

    OutputSink sink(out_path);
    *sink.os << "trial,rank,profile,success,decoder,wall_time_ns\n";
    for (unsigned trial = 0; trial < trials; ++trial) {
        auto rng = trial_rng(seed, trial);
        const SkewPoly msg = random_message(code, rng);
        const auto cw = code.encode(msg);
        const auto err =
            sample_error(t, code.length(), ErrorSpec{profile, splitmix64(seed) ^ trial});
        std::vector<RingElement> word;
        word.reserve(cw.size());
        for (std::size_t j = 0; j < cw.size(); ++j) word.push_back(t.add(cw[j], err.error[j]));

        const auto run = [&](const char* name, bool wb) {
            const auto start = std::chrono::steady_clock::now();
            const DecodeResult res =
                wb ? welch_berlekamp_decode(code, word) : decode(code, word, options);
            const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
            const bool ok = res.success() && *res.message == msg;
            *sink.os << trial << ',' << rank << ',' << profile.to_string() << ','
                     << (ok ? 1 : 0) << ',' << name << ',' << ns << "\n";
        };
        if (run_fast) run("fast", false);
        if (run_wb) run("wb", true);
    }
    return 0;
}

int cmd_bench(std::uint64_t p, unsigned r, unsigned s, const std::string& n_grid,
              unsigned trials, const std::string& decoder, std::uint64_t seed,
              const std::string& out_path) {
    std::vector<unsigned> grid;
    std::stringstream ss(n_grid);
    for (std::string item; std::getline(ss, item, ',');)
        grid.push_back(static_cast<unsigned>(std::stoul(item)));
    if (grid.empty()) throw std::runtime_error("empty n grid");
    const bool run_fast = decoder == "fast" || decoder == "both";
    const bool run_wb = decoder == "wb" || decoder == "both";
    if (!run_fast && !run_wb) throw std::runtime_error("decoder must be fast, wb or both");

    OutputSink sink(out_path);
    *sink.os << "n,decoder,median_ns,ops_count\n";
    for (unsigned n : grid) {
        const unsigned k = std::max(1u, n / 2);
        GaloisTower tower(GaloisTower::auto_params(p, r, s, n));
        GabidulinCode code(tower, GabidulinCode::power_basis_support(tower, n), k);
        RankProfile profile;
        profile.counts.assign(r, 0);
        profile.counts[0] = code.decoding_radius();

        const auto run = [&](const char* name, bool wb) {
            std::vector<std::uint64_t> ns_samples, op_samples;
            for (unsigned trial = 0; trial < trials; ++trial) {
                auto rng = trial_rng(seed, trial ^ (std::uint64_t{n} << 32));
                const SkewPoly msg = random_message(code, rng);
                const auto cw = code.encode(msg);
                const auto err = sample_error(tower, n, ErrorSpec{profile, seed + trial});
                std::vector<RingElement> word;
                for (std::size_t j = 0; j < cw.size(); ++j)
                    word.push_back(tower.add(cw[j], err.error[j]));
                tower.reset_smul_count();
                const auto start = std::chrono::steady_clock::now();
                const DecodeResult res =
                    wb ? welch_berlekamp_decode(code, word) : decode(code, word);
                const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
                op_samples.push_back(tower.smul_count());
                ns_samples.push_back(static_cast<std::uint64_t>(ns));
                if (!res.success() || !(*res.message == msg))
                    throw std::runtime_error("bench: decoder failed a within-radius trial");
            }
            std::sort(ns_samples.begin(), ns_samples.end());
            std::sort(op_samples.begin(), op_samples.end());
            *sink.os << n << ',' << name << ',' << ns_samples[ns_samples.size() / 2] << ','
                     << op_samples[op_samples.size() / 2] << "\n";
        };
        if (run_fast) run("fast", false);
        if (run_wb) run("wb", true);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gabidulin rank-metric codes over Galois rings"};
    app.require_subcommand(1);

    // params
    auto* sp = app.add_subcommand("params", "generate a code configuration file");
    std::uint64_t p = 2;
    unsigned r = 2, s = 1, m = 4, n = 0, k = 0;
    std::string out_path, config_path, in_path, out_file;
    sp->add_option("--p", p, "characteristic prime");
    sp->add_option("--r", r, "nilpotency exponent");
    sp->add_option("--s", s, "degree of R over the base");
    sp->add_option("--m", m, "degree of S over R");
    sp->add_option("--n", n, "code length (defaults to m)");
    sp->add_option("--k", k, "code dimension");
    sp->add_option("--out", out_path, "output path (stdout when omitted)");

    // encode / decode
    bool raw = false, trace = false;
    auto* se = app.add_subcommand("encode", "encode a message file");
    auto* sd = app.add_subcommand("decode", "decode a received word file");
    for (auto* cmd : {se, sd}) {
        cmd->add_option("--config", config_path, "code configuration file")->required();
        cmd->add_flag("--raw", raw, "treat the message side as raw bytes");
        cmd->add_option("input", in_path, "input file")->required();
        cmd->add_option("output", out_file, "output file")->required();
    }
    sd->add_flag("--trace", trace, "print key-equation exponents to stderr");

    // simulate
    auto* ss = app.add_subcommand("simulate", "Monte-Carlo channel simulation (CSV)");
    unsigned trials = 100;
    int rank_opt = 0;
    std::string profile_opt, decoder = "fast", csv_path;
    std::uint64_t seed = 0;
    ss->add_option("--config", config_path, "code configuration file")->required();
    ss->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
    ss->add_option("--rank", rank_opt, "error rank (free errors)");
    ss->add_option("--profile", profile_opt, "error rank profile, e.g. \"1+x\"");
    ss->add_option("--seed", seed, "PRNG seed");
    ss->add_option("--decoder", decoder, "fast, wb or both");
    ss->add_option("--out", csv_path, "CSV output path (stdout when omitted)");
    ss->add_flag("--trace", trace, "print key-equation exponents to stderr");

    // bench
    auto* sb = app.add_subcommand("bench", "complexity benchmark over a length grid (CSV)");
    std::string n_grid = "16,32,64,128";
    sb->add_option("--p", p, "characteristic prime");
    sb->add_option("--r", r, "nilpotency exponent");
    sb->add_option("--s", s, "degree of R over the base");
    sb->add_option("--n-grid", n_grid, "comma separated lengths (n = m, k = n/2)");
    sb->add_option("--trials", trials, "trials per length")->check(CLI::PositiveNumber);
    sb->add_option("--decoder", decoder, "fast, wb or both");
    sb->add_option("--seed", seed, "PRNG seed");
    sb->add_option("--out", csv_path, "CSV output path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sp->parsed()) {
            if (n == 0) n = m;
            if (k == 0) k = (n + 1) / 2;
            return cmd_params(p, r, s, m, n, k, out_path);
        }
        if (se->parsed()) return cmd_encode(config_path, in_path, out_file, raw);
        if (sd->parsed()) return cmd_decode(config_path, in_path, out_file, raw, trace);
        if (ss->parsed())
            return cmd_simulate(config_path, trials, profile_opt.empty() ? rank_opt : -1,
                                profile_opt, seed, decoder, csv_path, trace);
        if (sb->parsed()) return cmd_bench(p, r, s, n_grid, trials, decoder, seed, csv_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
