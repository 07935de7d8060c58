// recpass: security analysis of gesture and unlock-pattern passwords.
// Subcommands cover dataset synthesis, SAX encoding, recognizer scoring,
// parameter sweeps, Markov training, guessing attacks, partial-guessing
// metrics, security bounds, the pattern baseline and bias reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "recpass/bias.hpp"
#include "recpass/guess_metrics.hpp"
#include "recpass/markov.hpp"
#include "recpass/pattern.hpp"
#include "recpass/roc.hpp"
#include "recpass/sax.hpp"
#include "recpass/synth.hpp"
#include "recpass/trace_io.hpp"

namespace {

using namespace recpass;

constexpr const char* kVersion = "0.1.0";

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

using KV = std::vector<std::pair<std::string, std::string>>;

// Every artifact starts with these comment lines; all readers skip them.
// Deliberately no timestamps: reruns must be byte-identical.
void write_provenance(std::ostream& out, const std::string& subcommand, const KV& config,
                      std::uint64_t seed) {
    out << "# recpass " << kVersion << '\n';
    out << "# subcommand: " << subcommand << '\n';
    out << "# config:";
    for (const auto& [k, v] : config) out << ' ' << k << '=' << v;
    out << '\n';
    out << "# seed: " << seed << '\n';
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    return out;
}

TraceSet load_dataset(const std::string& path) {
    const auto result = parse_trace_file(path, sniff_format(path));
    for (const auto& issue : result.issues)
        std::cerr << "warning: " << path << ":" << issue.line << ": " << issue.message << '\n';
    if (result.set.traces.empty()) throw std::runtime_error(path + ": no usable traces");
    return result.set;
}

std::vector<SaxWord> encode_dataset(const TraceSet& set, const SaxParams& params) {
    std::vector<SaxWord> words;
    words.reserve(set.traces.size());
    for (const auto& tr : set.traces) words.push_back(sax_encode_2d(znormalize(tr), params));
    return words;
}

std::vector<AccountWord> to_account_words(const TraceSet& set, const std::vector<SaxWord>& words) {
    std::vector<AccountWord> out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        AccountWord aw;
        aw.account_id = set.traces[i].account_id;
        for (int j = 0; j < words[i].omega(); ++j) aw.symbols.push_back(words[i].combined(j));
        out.push_back(std::move(aw));
    }
    return out;
}

// "4..12" or "7"
std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

// "2^26" or "1000000"
std::uint64_t parse_count(const std::string& text) {
    const auto caret = text.find('^');
    if (caret == std::string::npos) return std::stoull(text);
    const auto base = std::stoull(text.substr(0, caret));
    const auto exp = std::stoull(text.substr(caret + 1));
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) v *= base;
    return v;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    if (out.empty()) throw std::runtime_error("empty list: '" + text + "'");
    return out;
}

std::string combined_symbol_text(int combined, int beta) {
    return "x" + std::to_string(combined / beta) + "y" + std::to_string(combined % beta);
}

void write_pgm_rows(std::ostream& out, const std::vector<PartialGuessReport>& reports) {
    out << "alpha,mu_alpha,lambda_mu,g_alpha,bits,bits_error,reached\n";
    for (const auto& r : reports)
        out << fmt(r.alpha) << ',' << fmt(r.mu_alpha) << ',' << fmt(r.lambda_mu) << ','
            << fmt(r.g_alpha) << ',' << fmt(r.bits) << ',' << fmt(r.bits_error_bound) << ','
            << (r.reached ? 1 : 0) << '\n';
}

struct GenSynthArgs {
    int accounts = 100, samples = 4, points = 64;
    double jitter = 0.05;
    std::string format = "delimited-text";
    std::string out;
};

void run_gen_synth(const GenSynthArgs& a, std::uint64_t seed) {
    SynthSpec spec;
    spec.accounts = a.accounts;
    spec.samples_per_account = a.samples;
    spec.jitter = a.jitter;
    spec.points_per_trace = a.points;
    const TraceSet set = synth_gestures(spec, seed);
    const TraceFormat format = a.format == "record-stream" ? TraceFormat::record_stream
                                                           : TraceFormat::delimited_text;
    auto out = open_out(a.out);
    write_provenance(out, "gen-synth",
                     {{"accounts", std::to_string(a.accounts)},
                      {"samples", std::to_string(a.samples)},
                      {"jitter", fmt(a.jitter)},
                      {"points", std::to_string(a.points)},
                      {"format", a.format}},
                     seed);
    write_trace_file(out, set, format);
    std::cout << "wrote " << set.traces.size() << " traces (" << a.accounts << " accounts) to "
              << a.out << '\n';
}

struct EncodeArgs {
    std::string dataset, out;
    int omega = 8, beta = 6;
};

void run_encode(const EncodeArgs& a, std::uint64_t seed) {
    const TraceSet set = load_dataset(a.dataset);
    const SaxParams params(a.omega, a.beta);
    const auto words = encode_dataset(set, params);
    auto out = open_out(a.out);
    write_provenance(out, "encode",
                     {{"dataset", a.dataset},
                      {"omega", std::to_string(a.omega)},
                      {"beta", std::to_string(a.beta)}},
                     seed);
    out << "account_id,sample_id,n_original,word\n";
    for (std::size_t i = 0; i < words.size(); ++i)
        out << set.traces[i].account_id << ',' << set.traces[i].sample_id << ','
            << words[i].n_original << ',' << to_text(words[i]) << '\n';
    std::cout << "encoded " << words.size() << " traces at omega=" << a.omega
              << " beta=" << a.beta << " to " << a.out << '\n';
}

struct ScoreArgs {
    std::string recognizer = "sax";
    std::string template_path, attempt_path, out;
    int omega = 8, beta = 6;
};

void run_score(const ScoreArgs& a, std::uint64_t seed) {
    const TraceSet tmpl_set = load_dataset(a.template_path);
    const TraceSet att_set = load_dataset(a.attempt_path);
    const RawTrace& tmpl = tmpl_set.traces.front();
    const RawTrace& att = att_set.traces.front();
    const RecognizerKind kind = recognizer_from_name(a.recognizer);
    double score = 0;
    if (kind == RecognizerKind::sax) {
        const SaxParams params(a.omega, a.beta);
        score = score_sax(sax_encode_2d(znormalize(tmpl), params),
                          sax_encode_2d(znormalize(att), params))
                    .value;
    } else if (kind == RecognizerKind::dtw) {
        score = score_dtw(znormalize(tmpl), znormalize(att)).value;
    } else {
        score = score_protractor(znormalize(tmpl), znormalize(att)).value;
    }
    nlohmann::json rec;
    rec["recognizer"] = a.recognizer;
    rec["template"] = tmpl.account_id + "/" + tmpl.sample_id;
    rec["attempt"] = att.account_id + "/" + att.sample_id;
    rec["score"] = score;
    if (kind == RecognizerKind::sax) {
        rec["omega"] = a.omega;
        rec["beta"] = a.beta;
    }
    std::cout << rec.dump() << '\n';
    if (!a.out.empty()) {
        auto out = open_out(a.out);
        write_provenance(out, "score",
                         {{"recognizer", a.recognizer},
                          {"template", a.template_path},
                          {"attempt", a.attempt_path}},
                         seed);
        out << rec.dump() << '\n';
    }
}

struct SweepArgs {
    std::string dataset, out;
    std::string omega = "4..12", beta = "3..10";
    std::string recognizer = "sax";
    std::size_t impostor_cap = 50;
};

void run_sweep(const SweepArgs& a, std::uint64_t seed, int threads) {
    if (a.recognizer != "sax")
        throw std::runtime_error("sweep-params supports the sax recognizer only");
    const TraceSet set = load_dataset(a.dataset);
    const auto [omega_lo, omega_hi] = parse_range(a.omega);
    const auto [beta_lo, beta_hi] = parse_range(a.beta);
    const auto grid =
        param_sweep(set, omega_lo, omega_hi, beta_lo, beta_hi, a.impostor_cap, seed, threads);
    auto out = open_out(a.out);
    write_provenance(out, "sweep-params",
                     {{"dataset", a.dataset},
                      {"omega", a.omega},
                      {"beta", a.beta},
                      {"recognizer", a.recognizer},
                      {"impostor-cap", std::to_string(a.impostor_cap)}},
                     seed);
    out << "omega,beta,auroc,n_genuine,n_impostor\n";
    const SweepCell* best = nullptr;
    for (const auto& cell : grid) {
        out << cell.omega << ',' << cell.beta << ',' << fmt(cell.auroc) << ',' << cell.n_genuine
            << ',' << cell.n_impostor << '\n';
        if (!best || cell.auroc > best->auroc) best = &cell;
    }
    std::cout << "swept " << grid.size() << " cells; best auroc " << fmt(best->auroc)
              << " at omega=" << best->omega << " beta=" << best->beta << '\n';
}

struct TrainArgs {
    std::string dataset, out;
    int omega = 8, beta = 6, n = 3;
    std::string smoothing = "good-turing";
    double lambda = 0.01;
};

void run_train(const TrainArgs& a, std::uint64_t seed) {
    const TraceSet set = load_dataset(a.dataset);
    const SaxParams params(a.omega, a.beta);
    const auto words = encode_dataset(set, params);
    const MarkovModel model = train(words, a.n, smoothing_from_name(a.smoothing), a.lambda);
    auto out = open_out(a.out);
    write_provenance(out, "train",
                     {{"dataset", a.dataset},
                      {"omega", std::to_string(a.omega)},
                      {"beta", std::to_string(a.beta)},
                      {"n", std::to_string(a.n)},
                      {"smoothing", a.smoothing},
                      {"lambda", fmt(a.lambda)}},
                     seed);
    save_model(out, model);
    std::cout << "trained " << a.n << "-gram (" << a.smoothing << ") on " << model.corpus_size
              << " words, " << model.trans_counts.size() << " contexts";
    if (!model.degenerate_contexts.empty())
        std::cout << "; " << model.degenerate_contexts.size()
                  << " contexts fell back to unsmoothed estimates";
    std::cout << "; saved to " << a.out << '\n';
}

struct AttackArgs {
    std::string model, targets, out;
    std::string max_guesses = "2^20";
};

void run_attack(const AttackArgs& a, std::uint64_t seed) {
    const MarkovModel model = load_model(a.model);
    const TraceSet set = load_dataset(a.targets);
    const SaxParams params(model.word_length, model.beta);
    std::vector<std::vector<int>> targets;
    for (const auto& word : encode_dataset(set, params)) {
        std::vector<int> symbols;
        for (int i = 0; i < word.omega(); ++i) symbols.push_back(word.combined(i));
        targets.push_back(std::move(symbols));
    }
    const std::uint64_t max_guesses = parse_count(a.max_guesses);
    const auto checkpoints = power_of_two_checkpoints(max_guesses);
    GuessEnumerator stream(model, max_guesses);
    const GuessingCurve curve = guessing_entropy(stream, targets, checkpoints);
    auto out = open_out(a.out);
    write_provenance(out, "attack",
                     {{"model", a.model},
                      {"targets", a.targets},
                      {"max-guesses", a.max_guesses}},
                     seed);
    out << "guesses,cracked_fraction\n";
    for (const auto& [g, f] : curve.points) out << g << ',' << fmt(f) << '\n';
    std::cout << "attacked " << targets.size() << " targets; cracked "
              << fmt(curve.points.back().second * 100) << "% within " << a.max_guesses
              << " guesses";
    if (curve.stream_exhausted) std::cout << " (guess stream exhausted early)";
    std::cout << "; curve in " << a.out << '\n';
}

struct PgmArgs {
    std::string model, out;
    std::string alphas = "0.1,0.2,0.5";
    std::string method = "histogram";
    double bucket_width = 0.01;
};

void run_pgm(const PgmArgs& a, std::uint64_t seed) {
    const MarkovModel model = load_model(a.model);
    const auto alphas = parse_double_list(a.alphas);
    std::vector<PartialGuessReport> reports;
    if (a.method == "histogram") {
        const ProbHistogram hist = build_prob_histogram(model, a.bucket_width);
        for (double alpha : alphas) reports.push_back(partial_guessing(hist, alpha));
    } else if (a.method == "stream") {
        for (double alpha : alphas) {
            GuessEnumerator stream(model);
            reports.push_back(partial_guessing(stream, alpha));
        }
    } else {
        throw std::runtime_error("unknown pgm method '" + a.method + "'");
    }
    auto out = open_out(a.out);
    write_provenance(out, "pgm",
                     {{"model", a.model},
                      {"alpha", a.alphas},
                      {"method", a.method},
                      {"bucket-width", fmt(a.bucket_width)}},
                     seed);
    write_pgm_rows(out, reports);
    for (const auto& r : reports) {
        std::cout << "alpha=" << fmt(r.alpha);
        if (r.reached)
            std::cout << ": mu=" << fmt(r.mu_alpha) << " G=" << fmt(r.g_alpha)
                      << " bits=" << fmt(r.bits) << '\n';
        else
            std::cout << ": unreachable (model covers only " << fmt(r.lambda_mu)
                      << " of the probability mass)\n";
    }
    std::cout << "report in " << a.out << '\n';
}

struct BoundsArgs {
    std::string dataset, out;
    std::string fractions = "0.25,0.5,0.75,1.0";
    std::string alphas = "0.2";
    int omega = 8, beta = 6;
    double bucket_width = 0.01;
};

void run_bounds(const BoundsArgs& a, std::uint64_t seed) {
    const TraceSet set = load_dataset(a.dataset);
    const SaxParams params(a.omega, a.beta);
    const auto corpus = to_account_words(set, encode_dataset(set, params));
    const auto rows = bounds_report(corpus, a.beta * a.beta, a.omega, parse_double_list(a.fractions),
                                    parse_double_list(a.alphas), seed, a.bucket_width);
    auto out = open_out(a.out);
    write_provenance(out, "bounds",
                     {{"dataset", a.dataset},
                      {"fractions", a.fractions},
                      {"alphas", a.alphas},
                      {"omega", std::to_string(a.omega)},
                      {"beta", std::to_string(a.beta)}},
                     seed);
    out << "fraction,smoothing,alpha,bits\n";
    for (const auto& row : rows)
        out << fmt(row.fraction) << ',' << row.smoothing << ',' << fmt(row.alpha) << ','
            << fmt(row.bits) << '\n';
    std::cout << "bounds table (" << rows.size() << " rows) in " << a.out << '\n';
}

struct PatternPgmArgs {
    std::string corpus, out;
    std::string alphas = "0.2";
    int n = 3;
    double lambda = 0.01;
};

void run_pattern_pgm(const PatternPgmArgs& a, std::uint64_t seed) {
    const auto patterns = parse_pattern_file(a.corpus);
    const PatternModel model = pattern_model(patterns, a.n, a.lambda);
    for (std::size_t idx : model.rejected)
        std::cerr << "warning: " << a.corpus << ": pattern " << (idx + 1) << " is invalid, skipped\n";
    std::vector<PartialGuessReport> reports;
    for (double alpha : parse_double_list(a.alphas))
        reports.push_back(pattern_partial_guessing(model, alpha));
    for (const auto& r : reports)
        std::cout << "alpha=" << fmt(r.alpha) << ": mu=" << fmt(r.mu_alpha)
                  << " G=" << fmt(r.g_alpha) << " bits=" << fmt(r.bits) << '\n';
    if (!a.out.empty()) {
        auto out = open_out(a.out);
        write_provenance(out, "pattern pgm",
                         {{"corpus", a.corpus},
                          {"alpha", a.alphas},
                          {"n", std::to_string(a.n)},
                          {"lambda", fmt(a.lambda)}},
                         seed);
        write_pgm_rows(out, reports);
    }
}

struct HeatmapArgs {
    std::string dataset, out;
    std::string grid = "10x10";
};

void run_heatmap(const HeatmapArgs& a, std::uint64_t seed) {
    const TraceSet set = load_dataset(a.dataset);
    const auto x = a.grid.find('x');
    if (x == std::string::npos) throw std::runtime_error("grid must look like 10x10");
    const int rows = std::stoi(a.grid.substr(0, x));
    const int cols = std::stoi(a.grid.substr(x + 1));
    const auto maps = start_end_heatmap(set, rows, cols);
    auto out = open_out(a.out);
    write_provenance(out, "bias heatmap", {{"dataset", a.dataset}, {"grid", a.grid}}, seed);
    out << "map,row,col,fraction\n";
    for (const auto& [name, hm] :
         {std::pair<const char*, const Heatmap*>{"start", &maps.start}, {"end", &maps.end}}) {
        for (int r = 0; r < hm->rows; ++r)
            for (int c = 0; c < hm->cols; ++c)
                out << name << ',' << r << ',' << c << ','
                    << fmt(hm->cells[static_cast<std::size_t>(r) * hm->cols + c]) << '\n';
    }
    std::cout << "heatmaps (" << rows << "x" << cols << ") in " << a.out << '\n';
}

struct NgramArgs {
    std::string dataset, out;
    int n = 3;
    std::size_t top = 200;
    int omega = 8, beta = 6;
};

void run_ngrams(const NgramArgs& a, std::uint64_t seed) {
    const TraceSet set = load_dataset(a.dataset);
    const SaxParams params(a.omega, a.beta);
    std::vector<std::vector<int>> corpus;
    for (const auto& word : encode_dataset(set, params)) {
        std::vector<int> symbols;
        for (int i = 0; i < word.omega(); ++i) symbols.push_back(word.combined(i));
        corpus.push_back(std::move(symbols));
    }
    const auto cov = ngram_coverage(corpus, a.n, a.top);
    auto out = open_out(a.out);
    write_provenance(out, "bias ngrams",
                     {{"dataset", a.dataset},
                      {"n", std::to_string(a.n)},
                      {"top", std::to_string(a.top)},
                      {"omega", std::to_string(a.omega)},
                      {"beta", std::to_string(a.beta)}},
                     seed);
    out << "rank,ngram,count,fraction\n";
    for (std::size_t i = 0; i < cov.ranked.size(); ++i) {
        out << (i + 1) << ',';
        for (std::size_t j = 0; j < cov.ranked[i].first.size(); ++j) {
            if (j) out << '.';
            out << combined_symbol_text(cov.ranked[i].first[j], a.beta);
        }
        out << ',' << cov.ranked[i].second << ','
            << fmt(static_cast<double>(cov.ranked[i].second) /
                   static_cast<double>(cov.total_occurrences))
            << '\n';
    }
    std::cout << "top-" << a.top << " " << a.n << "-grams cover "
              << fmt(cov.coverage * 100) << "% of " << cov.total_occurrences << " occurrences ("
              << cov.distinct << " distinct); table in " << a.out << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"security metrics for gesture and unlock-pattern passwords"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("recpass ") + kVersion);
    app.set_config("--config", "", "config file (flags take precedence)");

    std::uint64_t seed = 42;
    int threads = 1;
    app.add_option("--seed", seed, "global random seed")->capture_default_str();
    app.add_option("--threads", threads, "worker thread cap")->capture_default_str();

    GenSynthArgs gen;
    auto* sub_gen = app.add_subcommand("gen-synth", "generate a synthetic gesture dataset");
    sub_gen->add_option("--accounts", gen.accounts)->capture_default_str();
    sub_gen->add_option("--samples", gen.samples, "samples per account")->capture_default_str();
    sub_gen->add_option("--jitter", gen.jitter)->capture_default_str();
    sub_gen->add_option("--points", gen.points, "points per trace")->capture_default_str();
    sub_gen->add_option("--format", gen.format)
        ->check(CLI::IsMember({"delimited-text", "record-stream"}))
        ->capture_default_str();
    sub_gen->add_option("--out", gen.out)->required();

    EncodeArgs enc;
    auto* sub_enc = app.add_subcommand("encode", "encode traces as 2-D SAX words");
    sub_enc->add_option("--dataset", enc.dataset)->required();
    sub_enc->add_option("--omega", enc.omega)->capture_default_str();
    sub_enc->add_option("--beta", enc.beta)->capture_default_str();
    sub_enc->add_option("--out", enc.out)->required();

    ScoreArgs sc;
    auto* sub_score = app.add_subcommand("score", "score one attempt against one template");
    sub_score->add_option("--recognizer", sc.recognizer)
        ->check(CLI::IsMember({"sax", "dtw", "protractor"}))
        ->capture_default_str();
    sub_score->add_option("--template", sc.template_path)->required();
    sub_score->add_option("--attempt", sc.attempt_path)->required();
    sub_score->add_option("--omega", sc.omega)->capture_default_str();
    sub_score->add_option("--beta", sc.beta)->capture_default_str();
    sub_score->add_option("--out", sc.out);

    SweepArgs sw;
    auto* sub_sweep = app.add_subcommand("sweep-params", "AUROC over an (omega, beta) grid");
    sub_sweep->add_option("--dataset", sw.dataset)->required();
    sub_sweep->add_option("--omega", sw.omega, "range lo..hi")->capture_default_str();
    sub_sweep->add_option("--beta", sw.beta, "range lo..hi")->capture_default_str();
    sub_sweep->add_option("--recognizer", sw.recognizer)->capture_default_str();
    sub_sweep->add_option("--impostor-cap", sw.impostor_cap)->capture_default_str();
    sub_sweep->add_option("--out", sw.out)->required();

    TrainArgs tr;
    auto* sub_train = app.add_subcommand("train", "train an n-gram Markov model");
    sub_train->add_option("--dataset", tr.dataset)->required();
    sub_train->add_option("--omega", tr.omega)->capture_default_str();
    sub_train->add_option("--beta", tr.beta)->capture_default_str();
    sub_train->add_option("--n", tr.n)->check(CLI::IsMember({2, 3}))->capture_default_str();
    sub_train->add_option("--smoothing", tr.smoothing)
        ->check(CLI::IsMember({"none", "additive", "good-turing"}))
        ->capture_default_str();
    sub_train->add_option("--lambda", tr.lambda)->capture_default_str();
    sub_train->add_option("--out", tr.out)->required();

    AttackArgs at;
    auto* sub_attack = app.add_subcommand("attack", "simulate a best-first guessing attack");
    sub_attack->add_option("--model", at.model)->required();
    sub_attack->add_option("--targets", at.targets)->required();
    sub_attack->add_option("--max-guesses", at.max_guesses, "count, '2^26' form allowed")
        ->capture_default_str();
    sub_attack->add_option("--out", at.out)->required();

    PgmArgs pg;
    auto* sub_pgm = app.add_subcommand("pgm", "partial guessing metric of a model");
    sub_pgm->add_option("--model", pg.model)->required();
    sub_pgm->add_option("--alpha", pg.alphas, "comma-separated list")->capture_default_str();
    sub_pgm->add_option("--method", pg.method)
        ->check(CLI::IsMember({"histogram", "stream"}))
        ->capture_default_str();
    sub_pgm->add_option("--bucket-width", pg.bucket_width, "bits")->capture_default_str();
    sub_pgm->add_option("--out", pg.out)->required();

    BoundsArgs bo;
    auto* sub_bounds = app.add_subcommand("bounds", "upper/lower security bounds vs corpus size");
    sub_bounds->add_option("--dataset", bo.dataset)->required();
    sub_bounds->add_option("--fractions", bo.fractions)->capture_default_str();
    sub_bounds->add_option("--alphas", bo.alphas)->capture_default_str();
    sub_bounds->add_option("--omega", bo.omega)->capture_default_str();
    sub_bounds->add_option("--beta", bo.beta)->capture_default_str();
    sub_bounds->add_option("--bucket-width", bo.bucket_width)->capture_default_str();
    sub_bounds->add_option("--out", bo.out)->required();

    PatternPgmArgs pp;
    auto* sub_pattern = app.add_subcommand("pattern", "3x3 unlock-pattern baseline");
    auto* sub_pattern_pgm = sub_pattern->add_subcommand("pgm", "partial guessing over patterns");
    sub_pattern->require_subcommand(1);
    sub_pattern_pgm->add_option("--corpus", pp.corpus)->required();
    sub_pattern_pgm->add_option("--alpha", pp.alphas)->capture_default_str();
    sub_pattern_pgm->add_option("--n", pp.n)->check(CLI::IsMember({2, 3}))->capture_default_str();
    sub_pattern_pgm->add_option("--lambda", pp.lambda)->capture_default_str();
    sub_pattern_pgm->add_option("--out", pp.out);

    HeatmapArgs hm;
    NgramArgs ng;
    auto* sub_bias = app.add_subcommand("bias", "human-bias reports");
    sub_bias->require_subcommand(1);
    auto* sub_heat = sub_bias->add_subcommand("heatmap", "start/end position heatmaps");
    sub_heat->add_option("--dataset", hm.dataset)->required();
    sub_heat->add_option("--grid", hm.grid)->capture_default_str();
    sub_heat->add_option("--out", hm.out)->required();
    auto* sub_ngrams = sub_bias->add_subcommand("ngrams", "n-gram frequency coverage");
    sub_ngrams->add_option("--dataset", ng.dataset)->required();
    sub_ngrams->add_option("--n", ng.n)->check(CLI::IsMember({2, 3}))->capture_default_str();
    sub_ngrams->add_option("--top", ng.top)->capture_default_str();
    sub_ngrams->add_option("--omega", ng.omega)->capture_default_str();
    sub_ngrams->add_option("--beta", ng.beta)->capture_default_str();
    sub_ngrams->add_option("--out", ng.out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sub_gen->parsed()) run_gen_synth(gen, seed);
        else if (sub_enc->parsed()) run_encode(enc, seed);
        else if (sub_score->parsed()) run_score(sc, seed);
        else if (sub_sweep->parsed()) run_sweep(sw, seed, threads);
        else if (sub_train->parsed()) run_train(tr, seed);
        else if (sub_attack->parsed()) run_attack(at, seed);
        else if (sub_pgm->parsed()) run_pgm(pg, seed);
        else if (sub_bounds->parsed()) run_bounds(bo, seed);
        else if (sub_pattern->parsed()) run_pattern_pgm(pp, seed);
        else if (sub_bias->parsed()) {
            if (sub_heat->parsed()) run_heatmap(hm, seed);
            else run_ngrams(ng, seed);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
