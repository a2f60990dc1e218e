// hullwalk: exact face-count tables and probabilities for convex hulls of
// random walks and bridges, with Monte Carlo and chamber-count verification.
//
// Exit codes: 0 success, 2 validation failure, 3 verification failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hullwalk/chambers.hpp"
#include "hullwalk/closed_forms.hpp"
#include "hullwalk/combinatorics.hpp"
#include "hullwalk/montecarlo.hpp"
#include "hullwalk/numbers.hpp"
#include "hullwalk/sampling.hpp"

namespace {

using hullwalk::BigRational;
using hullwalk::decimal_string;
using hullwalk::rational_string;
using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", out.out_path, "Write output to this file instead of stdout");
}

void emit(const OutputOptions& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + opt.out_path);
    f << text;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_field(fields[i]);
    }
    line += "\r\n";
    return line;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HULLWALK_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("HULLWALK_SEED is not a valid unsigned integer");
        }
    }
    return 1;
}

struct McFlags {
    long samples = 100000;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int workers = 0;
    double eps = 1e-9;
    double threshold = 3.0;
};

void add_mc_options(CLI::App* cmd, McFlags& mc) {
    cmd->add_option("--samples", mc.samples, "Number of Monte Carlo samples (>= 1000)")
        ->capture_default_str();
    cmd->add_option("--seed", mc.seed, "Master RNG seed (default: HULLWALK_SEED or 1)")
        ->each([&mc](const std::string&) { mc.seed_set = true; });
    cmd->add_option("--workers", mc.workers, "Worker threads (0 = available parallelism)")
        ->capture_default_str();
    cmd->add_option("--eps", mc.eps, "Geometric feasibility tolerance")->capture_default_str();
    cmd->add_option("--threshold", mc.threshold, "z-score pass threshold")->capture_default_str();
}

hullwalk::mc::McOptions resolve(const McFlags& mc) {
    if (mc.samples < 1000)
        throw std::invalid_argument("simulate: need --samples >= 1000");
    hullwalk::mc::McOptions opt;
    opt.samples = mc.samples;
    opt.seed = mc.seed_set ? mc.seed : default_seed();
    opt.workers = mc.workers;
    opt.eps = mc.eps;
    return opt;
}

json exact_value_json(const BigRational& v) {
    return json{{"exact", rational_string(v)}, {"decimal", decimal_string(v)}};
}

// ---------------------------------------------------------------------------
// exact

int cmd_exact(int n, int d, std::optional<int> k, bool total, const OutputOptions& out) {
    struct Row {
        std::string k;
        BigRational value;
    };
    std::vector<Row> rows;
    if (total) {
        rows.push_back({"total", hullwalk::forms::total_expected_faces(n, d)});
    } else if (k) {
        hullwalk::forms::validate_walk_query({n, d, *k, std::nullopt});
        rows.push_back({std::to_string(*k), hullwalk::forms::expected_faces_walk(n, d, *k)});
    } else {
        for (int kk = 0; kk < d; ++kk)
            rows.push_back({std::to_string(kk), hullwalk::forms::expected_faces_walk(n, d, kk)});
    }

    if (out.format == "csv") {
        std::string text = csv_line({"n", "d", "k", "exact", "decimal"});
        for (const auto& r : rows)
            text += csv_line({std::to_string(n), std::to_string(d), r.k, rational_string(r.value),
                              decimal_string(r.value)});
        emit(out, text);
    } else {
        json doc{{"schema_version", kSchemaVersion}, {"command", "exact"}, {"n", n}, {"d", d}};
        json jrows = json::array();
        for (const auto& r : rows) {
            json jr;
            jr["k"] = r.k == "total" ? json(r.k) : json(std::stoi(r.k));
            jr.update(exact_value_json(r.value));
            jrows.push_back(jr);
        }
        doc["rows"] = jrows;
        emit(out, doc.dump(2) + "\n");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// faceprob / absorb

int cmd_faceprob(bool walk, int n, int d, const std::vector<int>& indices,
                 const OutputOptions& out) {
    hullwalk::forms::FaceQuery query{n, d, static_cast<int>(indices.size()) - 1, indices};
    if (walk) hullwalk::forms::validate_walk_query(query);
    else hullwalk::forms::validate_bridge_query(query);
    const BigRational v = walk ? hullwalk::forms::face_prob_walk(n, d, indices)
                               : hullwalk::forms::face_prob_bridge(n, d, indices);
    if (out.format == "csv") {
        std::string idx;
        for (std::size_t i = 0; i < indices.size(); ++i)
            idx += (i ? " " : "") + std::to_string(indices[i]);
        std::string text = csv_line({"model", "n", "d", "indices", "exact", "decimal"});
        text += csv_line({walk ? "walk" : "bridge", std::to_string(n), std::to_string(d), idx,
                          rational_string(v), decimal_string(v)});
        emit(out, text);
    } else {
        json doc{{"schema_version", kSchemaVersion},
                 {"command", "faceprob"},
                 {"model", walk ? "walk" : "bridge"},
                 {"n", n},
                 {"d", d},
                 {"indices", indices}};
        doc.update(exact_value_json(v));
        emit(out, doc.dump(2) + "\n");
    }
    return 0;
}

int cmd_absorb(int d, const std::vector<int>& walks, const std::vector<int>& bridges,
               const OutputOptions& out) {
    const BigRational a = hullwalk::forms::absorption_prob(d, walks, bridges);
    const BigRational na = hullwalk::forms::non_absorption_prob(d, walks, bridges);
    if (out.format == "csv") {
        std::string text = csv_line({"d", "exact", "decimal", "non_absorption"});
        text += csv_line(
            {std::to_string(d), rational_string(a), decimal_string(a), rational_string(na)});
        emit(out, text);
    } else {
        json doc{{"schema_version", kSchemaVersion},
                 {"command", "absorb"},
                 {"d", d},
                 {"walks", walks},
                 {"bridges", bridges}};
        doc.update(exact_value_json(a));
        doc["non_absorption"] = rational_string(na);
        emit(out, doc.dump(2) + "\n");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// simulate

int emit_comparison(const std::string& what, const json& params, const BigRational& exact,
                    const hullwalk::mc::Estimate& est, double threshold,
                    const OutputOptions& out) {
    const auto rep = hullwalk::mc::compare(exact, est, threshold);
    json doc{{"schema_version", kSchemaVersion}, {"command", "simulate"}, {"target", what}};
    doc["params"] = params;
    doc["exact"] = rational_string(exact);
    doc["exact_decimal"] = decimal_string(exact);
    doc["p_hat"] = est.p_hat;
    doc["stderr"] = est.stderr_;
    doc["z"] = rep.z;
    doc["threshold"] = threshold;
    doc["pass"] = rep.pass;
    doc["samples"] = est.n_samples;
    doc["discards"] = est.n_discarded;
    doc["seed"] = est.seed;
    emit(out, doc.dump(2) + "\n");
    return rep.pass ? 0 : kExitVerification;
}

// ---------------------------------------------------------------------------
// chambers

int cmd_chambers(const std::vector<int>& b_blocks, const std::vector<int>& a_blocks, int d,
                 int trials, std::uint64_t seed, double eps, const OutputOptions& out) {
    using namespace hullwalk;
    chambers::ArrangementSpec spec{b_blocks, a_blocks};
    chambers::validate(spec);
    const int n = spec.ambient();
    const int r = static_cast<int>(a_blocks.size());
    const int codim = d + r;
    if (codim < 1 || codim > n - 1)
        throw std::invalid_argument("chambers: need 1 <= d + #bridges <= ambient - 1");

    const IntPolynomial chi = chambers::char_poly_product(spec);
    const auto planes = chambers::reflection_hyperplanes(spec);
    bool whitney_checked = false;
    bool whitney_match = true;
    if (planes.size() <= 22) {
        whitney_checked = true;
        whitney_match = chambers::char_poly_whitney(planes, n) == chi;
    }

    const BigInt regions = chambers::zaslavsky_regions(chi, n);
    const BigInt order = spec.group_order();
    const BigInt predicted = chambers::predicted_intersect_count(chi, n, codim);

    sample::JointSpec joint{b_blocks, a_blocks, d};
    int matched = 0;
    for (int t = 0; t < trials; ++t) {
        const auto a_rows = sample::increment_matrix(joint, seed, static_cast<std::uint64_t>(t));
        const auto basis = chambers::kernel_intersection_basis(a_rows, spec);
        const long count = chambers::chamber_intersect_count(spec, basis, eps);
        if (BigInt(count) == predicted) ++matched;
    }

    const BigRational ratio(predicted, order);
    const BigRational absorb = forms::absorption_prob(d, b_blocks, a_blocks);
    const bool closure = ratio == absorb;
    const bool ok = whitney_match && matched == trials && closure;

    json doc{{"schema_version", kSchemaVersion}, {"command", "chambers"}};
    doc["b_blocks"] = b_blocks;
    doc["a_blocks"] = a_blocks;
    doc["d"] = d;
    doc["ambient"] = n;
    doc["char_poly_product"] = chi.str();
    doc["char_poly_whitney"] =
        whitney_checked ? json(whitney_match ? chi.str() : "MISMATCH") : json(nullptr);
    doc["regions"] = regions.str();
    doc["group_order"] = order.str();
    doc["codim"] = codim;
    doc["predicted_intersect_count"] = predicted.str();
    doc["trials"] = trials;
    doc["trials_matched"] = matched;
    doc["predicted_over_order"] = rational_string(ratio);
    doc["absorption_prob"] = rational_string(absorb);
    doc["closure_match"] = closure;
    doc["pass"] = ok;
    emit(out, doc.dump(2) + "\n");
    return ok ? 0 : kExitVerification;
}

// ---------------------------------------------------------------------------
// identity-check

struct IdentityFailure {
    std::string what;
};

int cmd_identity_check(int max_n, int max_d, bool corrupt, const OutputOptions& out) {
    using namespace hullwalk;
    long checks = 0;
    std::optional<IdentityFailure> failure;

    auto expect_equal = [&](const BigRational& lhs, const BigRational& rhs,
                            const std::string& what) {
        if (failure) return;
        ++checks;
        if (lhs != rhs)
            failure = IdentityFailure{what + ": " + rational_string(lhs) +
                                      " != " + rational_string(rhs)};
    };

    bool corrupt_pending = corrupt;
    for (int n = 1; n <= max_n && !failure; ++n) {
        for (int d = 1; d <= std::min(n, max_d); ++d) {
            for (int k = 0; k < d; ++k) {
                BigRational closed = forms::expected_faces_walk(n, d, k);
                if (corrupt_pending) {
                    // Self-test hook: perturb as if one Stirling entry in the
                    // closed form were off by one.
                    closed += BigRational(2 * factorial(static_cast<unsigned>(k)),
                                          factorial(static_cast<unsigned>(n)));
                    corrupt_pending = false;
                }
                const std::string tuple = "(n=" + std::to_string(n) + ",d=" + std::to_string(d) +
                                          ",k=" + std::to_string(k) + ")";
                expect_equal(closed, forms::expected_faces_walk_bigsum(n, d, k),
                             "bigsum identity " + tuple);
                expect_equal(forms::expected_faces_walk(n, d, k),
                             forms::expected_faces_bridge(n + 1, d, k),
                             "walk/bridge identity " + tuple);
            }
            expect_equal(forms::total_expected_faces(n, d), [&] {
                BigRational s = 0;
                for (int k = 0; k < d; ++k) s += forms::expected_faces_walk(n, d, k);
                return s;
            }(), "total faces (n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")");

            BigRational vertex_sum = 0;
            for (int i = 0; i <= n; ++i) vertex_sum += forms::vertex_prob_walk(n, d, i);
            expect_equal(vertex_sum, forms::expected_faces_walk(n, d, 0),
                         "vertex sum (n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")");

            if (d <= n - 1)
                expect_equal(BigRational(n) * forms::vertex_prob_bridge(n, d),
                             forms::expected_faces_bridge(n, d, 0),
                             "bridge vertex sum (n=" + std::to_string(n) + ",d=" +
                                 std::to_string(d) + ")");

            if (d >= 1 && d <= n)
                expect_equal(forms::shift_avg_face_prob(n, d, {}),
                             forms::vertex_prob_bridge(n + 1, d),
                             "shift average k=0 (n=" + std::to_string(n) + ",d=" +
                                 std::to_string(d) + ")");
            if (d >= 2) {
                for (int l = 1; l <= n; ++l) {
                    const int lag[1] = {l};
                    const int idx[2] = {0, l};
                    expect_equal(forms::shift_avg_face_prob(n, d, lag),
                                 forms::face_prob_bridge(n + 1, d, idx),
                                 "shift average (n=" + std::to_string(n) + ",d=" +
                                     std::to_string(d) + ",l=" + std::to_string(l) + ")");
                }
            }
        }
    }

    // Absorption and its complement add to one for small joint hulls.
    const std::vector<std::vector<int>> walk_sets = {{}, {1}, {2}, {3}, {1, 2}};
    const std::vector<std::vector<int>> bridge_sets = {{}, {2}, {3}, {2, 2}};
    if (max_n >= 1 && max_d >= 1) {
        for (const auto& w : walk_sets) {
            for (const auto& b : bridge_sets) {
                if (w.empty() && b.empty()) continue;
                for (int d = 1; d <= max_d && !failure; ++d) {
                    expect_equal(forms::absorption_prob(d, w, b) +
                                     forms::non_absorption_prob(d, w, b),
                                 BigRational(1), "absorption complement (d=" + std::to_string(d) + ")");
                }
            }
        }
        for (int n = 1; n <= std::max(max_n, 50) && !failure; ++n) {
            BigRational s = 0;
            for (int i = 0; i <= n; ++i) s += forms::arcsine(n, i);
            expect_equal(s, BigRational(1), "arcsine normalization (n=" + std::to_string(n) + ")");
        }
    }

    json doc{{"schema_version", kSchemaVersion}, {"command", "identity-check"}};
    doc["max_n"] = max_n;
    doc["max_d"] = max_d;
    doc["checks"] = checks;
    doc["pass"] = !failure;
    if (failure) doc["first_failure"] = failure->what;
    emit(out, doc.dump(2) + "\n");
    return failure ? kExitVerification : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and Monte Carlo face statistics for convex hulls of random walks"};
    app.require_subcommand(1);

    // exact ------------------------------------------------------------
    OutputOptions exact_out;
    int exact_n = 0, exact_d = 0;
    std::optional<int> exact_k;
    bool exact_total = false;
    auto* exact_cmd = app.add_subcommand("exact", "Exact expected face counts");
    exact_cmd->add_option("--n", exact_n, "Walk length")->required();
    exact_cmd->add_option("--d", exact_d, "Ambient dimension")->required();
    exact_cmd->add_option("--k", exact_k, "Face dimension (default: all 0..d-1)");
    exact_cmd->add_flag("--total", exact_total, "Expected faces of all dimensions together");
    add_output_options(exact_cmd, exact_out);

    // faceprob ----------------------------------------------------------
    OutputOptions fp_out;
    bool fp_walk = false, fp_bridge = false;
    int fp_n = 0, fp_d = 0;
    std::vector<int> fp_indices;
    auto* fp_cmd = app.add_subcommand("faceprob", "Exact face probability");
    fp_cmd->add_flag("--walk", fp_walk, "Symmetric random walk model");
    fp_cmd->add_flag("--bridge", fp_bridge, "Exchangeable bridge model");
    fp_cmd->add_option("--n", fp_n, "Path length")->required();
    fp_cmd->add_option("--d", fp_d, "Ambient dimension")->required();
    fp_cmd->add_option("--indices", fp_indices, "Comma-separated step indices")
        ->required()
        ->delimiter(',');
    add_output_options(fp_cmd, fp_out);

    // absorb -------------------------------------------------------------
    OutputOptions ab_out;
    int ab_d = 0;
    std::vector<int> ab_walks, ab_bridges;
    auto* ab_cmd = app.add_subcommand("absorb", "Exact joint-hull absorption probability");
    ab_cmd->add_option("--d", ab_d, "Ambient dimension")->required();
    ab_cmd->add_option("--walks", ab_walks, "Walk lengths")->delimiter(',');
    ab_cmd->add_option("--bridges", ab_bridges, "Bridge lengths (each >= 2)")->delimiter(',');
    add_output_options(ab_cmd, ab_out);

    // simulate -----------------------------------------------------------
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo verification of an exact value");
    sim_cmd->require_subcommand(1);

    OutputOptions sfp_out;
    McFlags sfp_mc;
    bool sfp_walk = false, sfp_bridge = false;
    int sfp_n = 0, sfp_d = 0;
    std::vector<int> sfp_indices;
    auto* sfp = sim_cmd->add_subcommand("faceprob", "Face probability");
    sfp->add_flag("--walk", sfp_walk, "Symmetric random walk model");
    sfp->add_flag("--bridge", sfp_bridge, "Exchangeable bridge model");
    sfp->add_option("--n", sfp_n, "Path length")->required();
    sfp->add_option("--d", sfp_d, "Ambient dimension")->required();
    sfp->add_option("--indices", sfp_indices, "Step indices")->required()->delimiter(',');
    add_mc_options(sfp, sfp_mc);
    add_output_options(sfp, sfp_out);

    OutputOptions sf_out;
    McFlags sf_mc;
    std::string sf_model = "walk";
    int sf_n = 0, sf_d = 0, sf_k = 0;
    auto* sf = sim_cmd->add_subcommand("faces", "Expected number of k-faces");
    sf->add_option("--model", sf_model, "walk or bridge")
        ->check(CLI::IsMember({"walk", "bridge"}))
        ->capture_default_str();
    sf->add_option("--n", sf_n, "Path length")->required();
    sf->add_option("--d", sf_d, "Ambient dimension")->required();
    sf->add_option("--k", sf_k, "Face dimension")->required();
    add_mc_options(sf, sf_mc);
    add_output_options(sf, sf_out);

    OutputOptions sa_out;
    McFlags sa_mc;
    int sa_d = 0;
    std::vector<int> sa_walks, sa_bridges;
    auto* sa = sim_cmd->add_subcommand("absorb", "Joint-hull absorption probability");
    sa->add_option("--d", sa_d, "Ambient dimension")->required();
    sa->add_option("--walks", sa_walks, "Walk lengths")->delimiter(',');
    sa->add_option("--bridges", sa_bridges, "Bridge lengths")->delimiter(',');
    add_mc_options(sa, sa_mc);
    add_output_options(sa, sa_out);

    OutputOptions ss_out;
    McFlags ss_mc;
    int ss_n = 0, ss_d = 0;
    std::vector<int> ss_lags;
    std::string ss_mode = "cyclic";
    std::string ss_law = "nonsymmetric";
    double ss_t = 1.0;
    auto* ss = sim_cmd->add_subcommand("shift", "Shift-averaged face probability");
    ss->add_option("--n", ss_n, "Walk length")->required();
    ss->add_option("--d", ss_d, "Ambient dimension")->required();
    ss->add_option("--lags", ss_lags, "Lag tuple l_1 < ... < l_k")->delimiter(',');
    ss->add_option("--mode", ss_mode, "cyclic or windowed")
        ->check(CLI::IsMember({"cyclic", "windowed"}))
        ->capture_default_str();
    ss->add_option("--law", ss_law, "Increment law")
        ->check(CLI::IsMember({"symmetric", "nonsymmetric"}))
        ->capture_default_str();
    ss->add_option("--t", ss_t, "Noise scale for the nonsymmetric law")->capture_default_str();
    add_mc_options(ss, ss_mc);
    add_output_options(ss, ss_out);

    // chambers -----------------------------------------------------------
    OutputOptions ch_out;
    std::vector<int> ch_b, ch_a;
    int ch_d = 1, ch_trials = 100;
    McFlags ch_mc;
    auto* ch = app.add_subcommand("chambers", "Chamber-count verification of absorption");
    ch->add_option("--b", ch_b, "Sign-change block sizes (walks)")->delimiter(',');
    ch->add_option("--a", ch_a, "Permutation block sizes (bridges, each >= 2)")->delimiter(',');
    ch->add_option("--d", ch_d, "Ambient dimension of the sampled configuration")
        ->capture_default_str();
    ch->add_option("--trials", ch_trials, "Number of random subspaces")->capture_default_str();
    ch->add_option("--seed", ch_mc.seed, "Master RNG seed")
        ->each([&ch_mc](const std::string&) { ch_mc.seed_set = true; });
    ch->add_option("--eps", ch_mc.eps, "LP feasibility tolerance")->capture_default_str();
    add_output_options(ch, ch_out);

    // identity-check -------------------------------------------------------
    OutputOptions id_out;
    int id_max_n = 10, id_max_d = 4;
    bool id_corrupt = false;
    auto* id = app.add_subcommand("identity-check", "Exact identity battery");
    id->add_option("--max-n", id_max_n, "Largest path length")->capture_default_str();
    id->add_option("--max-d", id_max_d, "Largest ambient dimension")->capture_default_str();
    id->add_flag("--corrupt", id_corrupt,
                 "Self-test: perturb one closed-form value and expect a failure report");
    add_output_options(id, id_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (exact_cmd->parsed())
            return cmd_exact(exact_n, exact_d, exact_k, exact_total, exact_out);
        if (fp_cmd->parsed()) {
            if (fp_walk == fp_bridge)
                throw std::invalid_argument("faceprob: pass exactly one of --walk / --bridge");
            return cmd_faceprob(fp_walk, fp_n, fp_d, fp_indices, fp_out);
        }
        if (ab_cmd->parsed()) return cmd_absorb(ab_d, ab_walks, ab_bridges, ab_out);

        if (sfp->parsed()) {
            if (sfp_walk == sfp_bridge)
                throw std::invalid_argument("simulate faceprob: pass exactly one of --walk / --bridge");
            const auto opt = resolve(sfp_mc);
            json params{{"model", sfp_walk ? "walk" : "bridge"},
                        {"n", sfp_n},
                        {"d", sfp_d},
                        {"indices", sfp_indices}};
            if (sfp_walk) {
                const auto exact = hullwalk::forms::face_prob_walk(sfp_n, sfp_d, sfp_indices);
                const auto est = hullwalk::mc::estimate_face_prob(
                    hullwalk::sample::WalkSpec{sfp_n, sfp_d}, sfp_indices, opt);
                return emit_comparison("faceprob", params, exact, est, sfp_mc.threshold, sfp_out);
            }
            const auto exact = hullwalk::forms::face_prob_bridge(sfp_n, sfp_d, sfp_indices);
            const auto est = hullwalk::mc::estimate_face_prob(
                hullwalk::sample::BridgeSpec{sfp_n, sfp_d}, sfp_indices, opt);
            return emit_comparison("faceprob", params, exact, est, sfp_mc.threshold, sfp_out);
        }
        if (sf->parsed()) {
            const auto opt = resolve(sf_mc);
            json params{{"model", sf_model}, {"n", sf_n}, {"d", sf_d}, {"k", sf_k}};
            if (sf_model == "walk") {
                const auto exact = hullwalk::forms::expected_faces_walk(sf_n, sf_d, sf_k);
                const auto est = hullwalk::mc::estimate_expected_faces(
                    hullwalk::sample::WalkSpec{sf_n, sf_d}, sf_k, opt);
                return emit_comparison("faces", params, exact, est, sf_mc.threshold, sf_out);
            }
            const auto exact = hullwalk::forms::expected_faces_bridge(sf_n, sf_d, sf_k);
            const auto est = hullwalk::mc::estimate_expected_faces(
                hullwalk::sample::BridgeSpec{sf_n, sf_d}, sf_k, opt);
            return emit_comparison("faces", params, exact, est, sf_mc.threshold, sf_out);
        }
        if (sa->parsed()) {
            const auto opt = resolve(sa_mc);
            const auto exact = hullwalk::forms::absorption_prob(sa_d, sa_walks, sa_bridges);
            const auto est = hullwalk::mc::estimate_absorption(
                hullwalk::sample::JointSpec{sa_walks, sa_bridges, sa_d}, opt);
            json params{{"d", sa_d}, {"walks", sa_walks}, {"bridges", sa_bridges}};
            return emit_comparison("absorb", params, exact, est, sa_mc.threshold, sa_out);
        }
        if (ss->parsed()) {
            const auto opt = resolve(ss_mc);
            const auto exact = hullwalk::forms::shift_avg_face_prob(ss_n, ss_d, ss_lags);
            hullwalk::sample::WalkSpec spec{ss_n, ss_d};
            if (ss_law == "nonsymmetric") {
                spec.law = hullwalk::sample::WalkLaw::shifted_gaussian;
                spec.shift.assign(static_cast<std::size_t>(ss_d), 1.0);
                spec.noise_scale = ss_t;
            }
            const auto mode = ss_mode == "cyclic" ? hullwalk::mc::ShiftMode::cyclic
                                                  : hullwalk::mc::ShiftMode::windowed;
            const auto est = hullwalk::mc::estimate_shift_average(spec, ss_lags, mode, opt);
            json params{{"n", ss_n}, {"d", ss_d},   {"lags", ss_lags},
                        {"mode", ss_mode}, {"law", ss_law}, {"t", ss_t}};
            return emit_comparison("shift", params, exact, est, ss_mc.threshold, ss_out);
        }
        if (ch->parsed()) {
            const std::uint64_t seed = ch_mc.seed_set ? ch_mc.seed : default_seed();
            return cmd_chambers(ch_b, ch_a, ch_d, ch_trials, seed, ch_mc.eps, ch_out);
        }
        if (id->parsed()) return cmd_identity_check(id_max_n, id_max_d, id_corrupt, id_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return 0;
}
