// zipfseq command line: analyze | surrogate | fgn | dfa | shuffle
//
// Every command resolves its full configuration up front, hashes its inputs,
// and writes a manifest next to its outputs; re-running with the same inputs
// and flags reproduces every output byte for byte. Exit codes: 0 success,
// 2 validation error, 3 non-convergence, 4 I/O error.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#if defined(__GLIBC__)
#include <malloc.h>
#endif
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zipfseq/baselines.hpp"
#include "zipfseq/dfa.hpp"
#include "zipfseq/encoders.hpp"
#include "zipfseq/fgn.hpp"
#include "zipfseq/kernels.hpp"
#include "zipfseq/seqmodel.hpp"
#include "zipfseq/surrogate.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace zipfseq;

namespace {

constexpr const char* kVersion = "0.1.0";

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// small helpers
// ---------------------------------------------------------------------------

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, v);
    return buf;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path.string());
    return std::move(ss).str();
}

// temp file + rename so partially written outputs never appear
void write_file_atomic(const fs::path& path, const std::string& contents) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open output file: " + tmp.string());
        out.write(contents.data(),
                  static_cast<std::streamsize>(contents.size()));
        if (!out) throw IoError("error writing " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

// ---------------------------------------------------------------------------
// shared option bundles
// ---------------------------------------------------------------------------

struct CommonOpts {
    std::string out_dir;
    int threads = 0;
};

struct InputOpts {
    std::string input;
    std::string format = "text";          // text | fasta
    std::string encoding;                 // rank | ry ("" = by format)
    std::string record;                   // fasta record id
    std::string non_acgt = "skip";        // skip | fail
    bool keep_punctuation = false;
    bool no_lowercase = false;
};

struct DfaOpts {
    int order = 1;
    int windows = 20;
    std::string fit_range;  // "LO:HI"
    std::string segmentation = "both-ends";  // both-ends | forward
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    const char* env_out = std::getenv("ZIPFSEQ_OUT");
    o.out_dir = env_out ? env_out : ".";
    cmd->add_option("-o,--out", o.out_dir, "Output directory")
        ->capture_default_str();
    cmd->add_option("--threads", o.threads,
                    "Worker threads (0 = auto); never changes results");
}

void add_input(CLI::App* cmd, InputOpts& o) {
    cmd->add_option("input", o.input, "Input file")->required();
    cmd->add_option("--format", o.format, "Input format")
        ->check(CLI::IsMember({"text", "fasta"}))
        ->capture_default_str();
    cmd->add_option("--encoding", o.encoding,
                    "Series encoding: rank (default for text) or ry (default "
                    "for fasta)")
        ->check(CLI::IsMember({"rank", "ry"}));
    cmd->add_option("--record", o.record, "FASTA record id (default: all)");
    cmd->add_option("--non-acgt", o.non_acgt, "Non-ACGT policy for FASTA")
        ->check(CLI::IsMember({"skip", "fail"}))
        ->capture_default_str();
    cmd->add_flag("--keep-punctuation", o.keep_punctuation,
                  "Tokenize punctuation marks as their own tokens");
    cmd->add_flag("--no-lowercase", o.no_lowercase, "Disable case folding");
}

void add_dfa(CLI::App* cmd, DfaOpts& o) {
    cmd->add_option("--order", o.order, "Polynomial detrending order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--windows", o.windows,
                    "Number of log-spaced window sizes")
        ->check(CLI::Range(2, 1000))
        ->capture_default_str();
    cmd->add_option("--fit-range", o.fit_range,
                    "Fit range LO:HI over window sizes (default: all)");
    cmd->add_option("--segmentation", o.segmentation, "Segment anchoring")
        ->check(CLI::IsMember({"both-ends", "forward"}))
        ->capture_default_str();
}

std::pair<std::size_t, std::size_t> parse_fit_range(const std::string& s) {
    if (s.empty()) return {0, 0};
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--fit-range", "expected LO:HI");
    try {
        const auto lo = std::stoull(s.substr(0, colon));
        const auto hi = std::stoull(s.substr(colon + 1));
        if (lo == 0 || hi < lo)
            throw CLI::ValidationError("--fit-range", "need 0 < LO <= HI");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("--fit-range", "expected LO:HI integers");
    }
}

// window schedule with a configurable point count (the library default is 20)
std::vector<std::size_t> window_schedule(std::size_t n, int order, int count) {
    const std::size_t lmin = 2 * (static_cast<std::size_t>(order) + 2);
    const std::size_t lmax = n / 4;
    if (lmax < lmin)
        throw Error("series too short for DFA at order " + std::to_string(order));
    std::vector<std::size_t> windows;
    const double la = std::log(static_cast<double>(lmin));
    const double lb = std::log(static_cast<double>(lmax));
    for (int i = 0; i < count; ++i) {
        const double f =
            count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        const auto w =
            static_cast<std::size_t>(std::llround(std::exp(la + f * (lb - la))));
        if (windows.empty() || w > windows.back()) windows.push_back(w);
    }
    return windows;
}

DfaConfig make_dfa_config(const DfaOpts& o, std::size_t n, int threads) {
    DfaConfig cfg;
    cfg.order = o.order;
    cfg.window_sizes = window_schedule(n, o.order, o.windows);
    cfg.fit_range = parse_fit_range(o.fit_range);
    cfg.segmentation = o.segmentation == "forward" ? Segmentation::forward_only
                                                   : Segmentation::both_ends;
    cfg.threads = threads;
    return cfg;
}

json dfa_config_json(const DfaConfig& cfg) {
    json j;
    j["order"] = cfg.order;
    j["window_sizes"] = cfg.window_sizes;
    j["fit_range"] = {cfg.fit_range.first, cfg.fit_range.second};
    j["segmentation"] = cfg.segmentation == Segmentation::forward_only
                            ? "forward"
                            : "both-ends";
    return j;
}

json input_manifest_entry(const fs::path& path, const std::string& bytes) {
    json j;
    j["path"] = path.string();
    j["bytes"] = bytes.size();
    j["fnv1a64"] = hex64(fnv1a64(bytes));
    return j;
}

json base_manifest(const std::string& command) {
    json m;
    m["tool"] = "zipfseq";
    m["version"] = kVersion;
    m["command"] = command;
    m["kernel_backend"] = kernels::backend_name(kernels::active_backend());
    return m;
}

// ---------------------------------------------------------------------------
// ingestion shared by analyze/surrogate
// ---------------------------------------------------------------------------

struct LoadedInput {
    SymbolSequence sequence;
    std::uint64_t skipped_non_acgt = 0;
    MeasurementEncoding encoding = MeasurementEncoding::rank_value;
    json manifest_entry;
    json config;
};

LoadedInput load_input(const InputOpts& o) {
    LoadedInput li;
    const fs::path path(o.input);
    const std::string bytes = read_file(path);
    li.manifest_entry = input_manifest_entry(path, bytes);

    if (o.format == "fasta") {
        DnaEncodeOptions dna;
        dna.non_acgt_policy = o.non_acgt == "fail"
                                  ? DnaEncodeOptions::NonAcgtPolicy::fail
                                  : DnaEncodeOptions::NonAcgtPolicy::skip;
        std::istringstream in(bytes);
        auto res = parse_fasta(
            in, dna,
            o.record.empty() ? std::nullopt
                             : std::optional<std::string>(o.record));
        li.sequence = std::move(res.sequence);
        li.skipped_non_acgt = res.skipped_count;
        li.encoding = MeasurementEncoding::ry_walk;
    } else {
        TokenizerOptions tok;
        tok.lowercase = !o.no_lowercase;
        tok.punctuation_mode = o.keep_punctuation
                                   ? TokenizerOptions::PunctuationMode::as_tokens
                                   : TokenizerOptions::PunctuationMode::strip;
        li.sequence = tokenize(bytes, tok);
        li.encoding = MeasurementEncoding::rank_value;
    }
    if (!o.encoding.empty())
        li.encoding = o.encoding == "ry" ? MeasurementEncoding::ry_walk
                                         : MeasurementEncoding::rank_value;

    li.config["format"] = o.format;
    li.config["encoding"] =
        li.encoding == MeasurementEncoding::ry_walk ? "ry" : "rank";
    li.config["record"] = o.record;
    li.config["non_acgt"] = o.non_acgt;
    li.config["keep_punctuation"] = o.keep_punctuation;
    li.config["lowercase"] = !o.no_lowercase;
    return li;
}

NumericSeries encode_series(const SymbolSequence& seq, const FrequencyTable& table,
                            MeasurementEncoding enc) {
    return enc == MeasurementEncoding::ry_walk ? ry_encode(seq)
                                               : zipf_rank_encode(seq, table);
}

// ---------------------------------------------------------------------------
// output writers
// ---------------------------------------------------------------------------

void write_zipf_csv(const fs::path& path, const FrequencyTable& table) {
    std::string csv = "rank,symbol,count,freq\n";
    const double n = static_cast<double>(table.total());
    for (std::size_t r = 0; r < table.vocabulary_size(); ++r) {
        csv += std::to_string(r + 1);
        csv += ',';
        csv += table.alphabet().label(static_cast<SymbolId>(r));
        csv += ',';
        csv += std::to_string(table.counts()[r]);
        csv += ',';
        csv += format_double(static_cast<double>(table.counts()[r]) / n);
        csv += '\n';
    }
    write_file_atomic(path, csv);
}

void write_dfa_csv(const fs::path& path, const DfaResult& res, bool with_logs) {
    std::string csv = with_logs ? "L,F,log10L,log10F\n" : "L,F\n";
    for (std::size_t i = 0; i < res.window_sizes.size(); ++i) {
        csv += std::to_string(res.window_sizes[i]);
        csv += ',';
        csv += format_double(res.fluctuations[i]);
        if (with_logs) {
            csv += ',';
            csv += format_double(
                std::log10(static_cast<double>(res.window_sizes[i])));
            csv += ',';
            csv += format_double(std::log10(res.fluctuations[i]));
        }
        csv += '\n';
    }
    write_file_atomic(path, csv);
}

json dfa_result_json(const DfaResult& res) {
    json j;
    j["alpha"] = res.alpha;
    j["stderr"] = res.fit_stderr;
    j["r2"] = res.r_squared;
    j["fit_lo"] = res.fit_range.first;
    j["fit_hi"] = res.fit_range.second;
    return j;
}

json trace_json(const SurrogateResult& res) {
    json arr = json::array();
    for (const auto& rec : res.trace) {
        json r;
        r["alpha0"] = rec.alpha0;
        r["alpha_s"] = rec.alpha_s;
        r["seed"] = rec.seed;
        r["non_monotone"] = rec.non_monotone;
        arr.push_back(std::move(r));
    }
    return arr;
}

void write_json(const fs::path& path, const json& j) {
    write_file_atomic(path, j.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

int cmd_analyze(const CommonOpts& common, const InputOpts& input,
                const DfaOpts& dfa_opts) {
    LoadedInput li = load_input(input);
    if (li.sequence.empty()) throw Error("empty corpus: " + input.input);

    const auto table = build_frequency_table(li.sequence);
    const auto series = encode_series(li.sequence, table, li.encoding);
    const auto cfg = make_dfa_config(dfa_opts, series.size(), common.threads);
    const auto res = dfa_exponent(series, cfg);

    json manifest = base_manifest("analyze");
    manifest["inputs"] = json::array({li.manifest_entry});
    manifest["config"] = li.config;
    manifest["config"]["dfa"] = dfa_config_json(cfg);
    manifest["seeds"] = json::array();

    json summary;
    summary["command"] = "analyze";
    summary["n"] = li.sequence.size();
    summary["v"] = table.vocabulary_size();
    summary["alpha"] = res.alpha;
    summary["stderr"] = res.fit_stderr;
    summary["r2"] = res.r_squared;
    summary["fit"] = {{"lo", res.fit_range.first}, {"hi", res.fit_range.second}};
    if (li.skipped_non_acgt > 0) summary["skipped_non_acgt"] = li.skipped_non_acgt;
    summary["manifest"] = manifest;

    const fs::path out(common.out_dir);
    fs::create_directories(out);
    write_zipf_csv(out / "zipf.csv", table);
    write_dfa_csv(out / "dfa.csv", res, false);
    write_json(out / "summary.json", summary);
    write_json(out / "manifest.json", manifest);

    std::printf("N=%zu V=%zu alpha=%.4f stderr=%.4f r2=%.5f\n",
                li.sequence.size(), table.vocabulary_size(), res.alpha,
                res.fit_stderr, res.r_squared);
    return 0;
}

int cmd_surrogate(const CommonOpts& common, const InputOpts& input,
                  const DfaOpts& dfa_opts, double target_alpha, bool match_input,
                  double eps, std::uint64_t seed, int max_iters) {
    LoadedInput li = load_input(input);
    if (li.sequence.empty()) throw Error("empty corpus: " + input.input);

    const auto table = build_frequency_table(li.sequence);
    const auto cfg =
        make_dfa_config(dfa_opts, li.sequence.size(), common.threads);

    std::optional<double> input_alpha;
    double target = target_alpha;
    if (match_input) {
        const auto series = encode_series(li.sequence, table, li.encoding);
        input_alpha = dfa_exponent(series, cfg).alpha;
        target = *input_alpha;
    }

    MatchConfig mc;
    mc.target_alpha = target;
    mc.epsilon = eps;
    mc.base_seed = seed;
    mc.max_iters = max_iters;
    mc.dfa = cfg;
    mc.encoding = li.encoding;
    const auto res = match_target_exponent(table, mc);

    json manifest = base_manifest("surrogate");
    manifest["inputs"] = json::array({li.manifest_entry});
    manifest["config"] = li.config;
    manifest["config"]["dfa"] = dfa_config_json(cfg);
    manifest["config"]["target_alpha"] = target;
    manifest["config"]["match_input"] = match_input;
    manifest["config"]["epsilon"] = eps;
    manifest["config"]["max_iters"] = max_iters;
    manifest["seeds"] = json::array({seed});

    json summary;
    summary["command"] = "surrogate";
    summary["n"] = li.sequence.size();
    summary["v"] = table.vocabulary_size();
    if (input_alpha) summary["input_alpha"] = *input_alpha;
    summary["target_alpha"] = target;
    summary["epsilon"] = eps;
    summary["achieved_alpha"] = res.achieved_alpha;
    summary["final_alpha0"] = res.final_alpha0;
    summary["iterations"] = res.iterations;
    summary["converged"] = res.converged;
    summary["seeds_used"] = res.seeds_used;
    summary["trace"] = trace_json(res);
    summary["manifest"] = manifest;

    const fs::path out(common.out_dir);
    fs::create_directories(out);
    std::string body;
    body.reserve(res.sequence.size() * 8);
    for (std::size_t i = 0; i < res.sequence.size(); ++i) {
        body += res.sequence.label_at(i);
        body += '\n';
    }
    write_file_atomic(out / "surrogate.txt", body);
    write_json(out / "summary.json", summary);
    write_json(out / "manifest.json", manifest);

    std::printf("target=%.4f achieved=%.4f iterations=%d converged=%s\n",
                target, res.achieved_alpha, res.iterations,
                res.converged ? "true" : "false");
    if (!res.converged)
        throw NonConvergence("did not converge within max-iters; partial "
                             "result written with converged=false");
    return 0;
}

int cmd_fgn(const CommonOpts& common, std::size_t n, double alpha0,
            std::uint64_t seed, bool binary) {
    FgnConfig cfg{n, alpha0, seed};
    FgnMethod method;
    const auto x = generate_fgn(cfg, &method);

    json manifest = base_manifest("fgn");
    manifest["inputs"] = json::array();
    manifest["config"] = {{"n", n},
                          {"alpha0", alpha0},
                          {"binary", binary},
                          {"method", method == FgnMethod::circulant_exact
                                         ? "circulant"
                                         : "spectral-filter"}};
    manifest["seeds"] = json::array({seed});

    const fs::path out(common.out_dir);
    fs::create_directories(out);
    if (binary) {
        std::string bytes(reinterpret_cast<const char*>(x.data()),
                          x.size() * sizeof(double));
        write_file_atomic(out / "fgn.f64", bytes);
    } else {
        std::string body;
        body.reserve(x.size() * 20);
        for (double v : x) {
            body += format_double(v);
            body += '\n';
        }
        write_file_atomic(out / "fgn.txt", body);
    }
    write_json(out / "manifest.json", manifest);
    std::printf("n=%zu alpha0=%.4f -> %s\n", n, alpha0,
                binary ? "fgn.f64" : "fgn.txt");
    return 0;
}

NumericSeries read_series(const fs::path& path, bool binary,
                          json* manifest_entry) {
    const std::string bytes = read_file(path);
    if (manifest_entry) *manifest_entry = input_manifest_entry(path, bytes);
    NumericSeries x;
    if (binary) {
        if (bytes.size() % sizeof(double) != 0)
            throw Error("binary series file size is not a multiple of 8");
        x.resize(bytes.size() / sizeof(double));
        std::memcpy(x.data(), bytes.data(), bytes.size());
    } else {
        std::istringstream in(bytes);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            try {
                std::size_t pos = 0;
                const double v = std::stod(line, &pos);
                x.push_back(v);
                (void)pos;
            } catch (const std::exception&) {
                throw Error("bad number at line " + std::to_string(line_no) +
                            ": " + line);
            }
        }
    }
    if (x.empty()) throw Error("series file is empty: " + path.string());
    return x;
}

int cmd_dfa(const CommonOpts& common, const std::string& input,
            const DfaOpts& dfa_opts, bool binary) {
    json entry;
    const auto x = read_series(input, binary, &entry);
    const auto cfg = make_dfa_config(dfa_opts, x.size(), common.threads);
    const auto res = dfa_exponent(x, cfg);

    json manifest = base_manifest("dfa");
    manifest["inputs"] = json::array({entry});
    manifest["config"] = {{"binary", binary}};
    manifest["config"]["dfa"] = dfa_config_json(cfg);
    manifest["seeds"] = json::array();

    json summary = dfa_result_json(res);
    summary["n"] = x.size();
    summary["manifest"] = manifest;

    const fs::path out(common.out_dir);
    fs::create_directories(out);
    write_dfa_csv(out / "dfa.csv", res, true);
    write_json(out / "summary.json", summary);
    write_json(out / "manifest.json", manifest);

    std::printf("alpha=%.4f stderr=%.4f r2=%.5f fit=[%zu,%zu]\n", res.alpha,
                res.fit_stderr, res.r_squared, res.fit_range.first,
                res.fit_range.second);
    return 0;
}

int cmd_shuffle(const CommonOpts& common, const std::string& input,
                const std::string& level, std::uint64_t seed,
                const InputOpts& tok_opts) {
    const fs::path path(input);
    const std::string bytes = read_file(path);

    TokenizerOptions tok;
    tok.lowercase = !tok_opts.no_lowercase;
    tok.punctuation_mode = tok_opts.keep_punctuation
                               ? TokenizerOptions::PunctuationMode::as_tokens
                               : TokenizerOptions::PunctuationMode::strip;

    std::string body;
    if (level == "chars") {
        body = shuffle_characters(bytes, seed);
    } else if (level == "words") {
        const auto shuffled = shuffle_words(tokenize(bytes, tok), seed);
        body.reserve(bytes.size());
        for (std::size_t i = 0; i < shuffled.size(); ++i) {
            body += shuffled.label_at(i);
            body += '\n';
        }
    } else {
        const auto shuffled = shuffle_sentences(bytes, seed, tok);
        body.reserve(bytes.size());
        for (std::size_t i = 0; i < shuffled.size(); ++i) {
            body += shuffled.label_at(i);
            body += '\n';
        }
    }

    json manifest = base_manifest("shuffle");
    manifest["inputs"] = json::array({input_manifest_entry(path, bytes)});
    manifest["config"] = {{"level", level},
                          {"keep_punctuation", tok_opts.keep_punctuation},
                          {"lowercase", !tok_opts.no_lowercase}};
    manifest["seeds"] = json::array({seed});

    const fs::path out(common.out_dir);
    fs::create_directories(out);
    write_file_atomic(out / "shuffled.txt", body);
    write_json(out / "manifest.json", manifest);
    std::printf("level=%s seed=%llu -> shuffled.txt\n", level.c_str(),
                static_cast<unsigned long long>(seed));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
#if defined(__GLIBC__)
    // large analysis buffers are reused across pipeline stages; keep them in
    // the heap instead of handing them back to the kernel each time
    mallopt(M_MMAP_THRESHOLD, 1 << 30);
    mallopt(M_TRIM_THRESHOLD, 1 << 30);
#endif
    CLI::App app{"Zipf-preserving long-range correlated surrogate sequences"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("zipfseq ") + kVersion);

    // analyze
    CommonOpts an_common;
    InputOpts an_input;
    DfaOpts an_dfa;
    auto* analyze = app.add_subcommand(
        "analyze", "Zipf table + DFA exponent of a text or FASTA input");
    add_common(analyze, an_common);
    add_input(analyze, an_input);
    add_dfa(analyze, an_dfa);

    // surrogate
    CommonOpts su_common;
    InputOpts su_input;
    DfaOpts su_dfa;
    double su_target = 0.0;
    bool su_match_input = false;
    double su_eps = 0.01;
    std::uint64_t su_seed = 0;
    int su_max_iters = 40;
    auto* surrogate = app.add_subcommand(
        "surrogate",
        "Frequency-preserving surrogate matched to a target DFA exponent");
    add_common(surrogate, su_common);
    add_input(surrogate, su_input);
    add_dfa(surrogate, su_dfa);
    auto* topt = surrogate->add_option("--target-alpha", su_target,
                                       "Target exponent in [0.5, 1)");
    auto* mopt = surrogate->add_flag("--match-input", su_match_input,
                                     "Match the measured exponent of the input");
    topt->excludes(mopt);
    surrogate->add_option("--eps", su_eps, "Matching tolerance")
        ->capture_default_str();
    surrogate->add_option("--seed", su_seed, "Base seed")->capture_default_str();
    surrogate->add_option("--max-iters", su_max_iters, "Bisection iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // fgn
    CommonOpts fg_common;
    std::size_t fg_n = 0;
    double fg_alpha0 = 0.5;
    std::uint64_t fg_seed = 0;
    bool fg_binary = false;
    auto* fgn = app.add_subcommand("fgn", "Fractional Gaussian noise series");
    add_common(fgn, fg_common);
    fgn->add_option("-n,--length", fg_n, "Series length")->required();
    fgn->add_option("--alpha0", fg_alpha0, "Exponent in (0, 1)")
        ->capture_default_str();
    fgn->add_option("--seed", fg_seed, "Seed")->capture_default_str();
    fgn->add_flag("--binary", fg_binary,
                  "Write little-endian float64 instead of text");

    // dfa
    CommonOpts df_common;
    std::string df_input;
    DfaOpts df_dfa;
    bool df_binary = false;
    auto* dfa = app.add_subcommand("dfa", "DFA of a numeric series file");
    add_common(dfa, df_common);
    dfa->add_option("input", df_input, "Series file (one value per line)")
        ->required();
    add_dfa(dfa, df_dfa);
    dfa->add_flag("--binary", df_binary, "Input is little-endian float64");

    // shuffle
    CommonOpts sh_common;
    std::string sh_input;
    std::string sh_level = "words";
    std::uint64_t sh_seed = 0;
    InputOpts sh_tok;
    auto* shuffle =
        app.add_subcommand("shuffle", "Hierarchical shuffling baselines");
    add_common(shuffle, sh_common);
    shuffle->add_option("input", sh_input, "Input text file")->required();
    shuffle->add_option("--level", sh_level, "Shuffle level")
        ->check(CLI::IsMember({"chars", "words", "sentences"}))
        ->capture_default_str();
    shuffle->add_option("--seed", sh_seed, "Seed")->capture_default_str();
    shuffle->add_flag("--keep-punctuation", sh_tok.keep_punctuation,
                      "Tokenize punctuation marks as their own tokens");
    shuffle->add_flag("--no-lowercase", sh_tok.no_lowercase,
                      "Disable case folding");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(an_common, an_input, an_dfa);
        if (surrogate->parsed()) {
            if (!su_match_input && topt->count() == 0)
                throw Error("surrogate needs --target-alpha or --match-input");
            return cmd_surrogate(su_common, su_input, su_dfa, su_target,
                                 su_match_input, su_eps, su_seed, su_max_iters);
        }
        if (fgn->parsed())
            return cmd_fgn(fg_common, fg_n, fg_alpha0, fg_seed, fg_binary);
        if (dfa->parsed()) return cmd_dfa(df_common, df_input, df_dfa, df_binary);
        if (shuffle->parsed())
            return cmd_shuffle(sh_common, sh_input, sh_level, sh_seed, sh_tok);
    } catch (const NonConvergence& e) {
        std::fprintf(stderr, "zipfseq: %s\n", e.what());
        return 3;
    } catch (const IoError& e) {
        std::fprintf(stderr, "zipfseq: %s\n", e.what());
        return 4;
    } catch (const Error& e) {
        std::fprintf(stderr, "zipfseq: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "zipfseq: %s\n", e.what());
        return 2;
    }
    return 0;
}
