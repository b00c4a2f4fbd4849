// Command-line front end: every library operation behind a subcommand, with
// a JSON envelope (or TSV for tabular payloads) on stdout.
//
// Exit codes: 0 success, 1 a requested check failed, 2 usage or parse error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ballotope/checks.hpp"
#include "ballotope/envelope.hpp"
#include "ballotope/geometry.hpp"
#include "ballotope/linalg.hpp"
#include "ballotope/rational.hpp"
#include "ballotope/sequence.hpp"
#include "ballotope/svg.hpp"
#include "ballotope/vertex.hpp"

namespace {

using namespace ballotope;

constexpr std::uint64_t kDefaultSeed = 12345;

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw std::invalid_argument("empty rational list");
    return out;
}

GapVector parse_vector_arg(const std::string& csv) { return GapVector(parse_rational_list(csv)); }

IntMatrix parse_matrix_arg(const std::string& text) {
    IntMatrix m;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<BigInt> r;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            Rational q = parse_rational(cell);
            if (denominator(q) != 1) throw std::invalid_argument("matrix entries must be integers");
            r.push_back(numerator(q));
        }
        if (r.empty()) throw std::invalid_argument("empty matrix row");
        m.push_back(std::move(r));
    }
    if (m.empty()) throw std::invalid_argument("empty matrix");
    return m;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("BALLOTOPE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("BALLOTOPE_SEED is not an unsigned integer");
        }
    }
    return kDefaultSeed;
}

Json int_matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (const auto& r : m) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(x.str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json membership_json(const MembershipReport& rep) {
    Json j;
    j["in_cone"] = rep.in_cone;
    j["in_polytope"] = rep.in_polytope;
    j["in_cone_interior"] = rep.in_cone_interior;
    j["min_ballot_dot"] = rep.min_ballot_dot ? Json(rational_str(*rep.min_ballot_dot)) : Json(nullptr);
    Json violated = Json::array();
    for (const auto& w : rep.violated) violated.push_back(w.entries);
    j["violated"] = std::move(violated);
    return j;
}

struct Outcome {
    Json result;
    std::string tsv;  // empty = derive key/value lines from result
    int exit_code = 0;
};

std::string flatten_tsv(const Json& result) {
    std::string out;
    for (const auto& [key, value] : result.items()) {
        out += key;
        out += '\t';
        out += value.is_string() ? value.get<std::string>() : value.dump();
        out += '\n';
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bidirectional ballot sequences and the ballot polytope"};
    app.require_subcommand(1);

    std::string format = "json";
    int threads = 1;
    bool timing = false;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--threads", threads, "worker threads for parallelizable operations")
        ->check(CLI::PositiveNumber);
    app.add_flag("--timing", timing, "report real elapsed time in the envelope");

    std::function<Outcome()> run;
    std::string command;
    Json params;

    auto arm = [&](CLI::App* sub, std::function<Outcome()> fn) {
        sub->callback([&, sub, fn] {
            command = sub->get_name();
            run = fn;
        });
    };

    // --- count -------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("count", "count ballot sequences of length n");
        auto n = std::make_shared<int>(1);
        auto method = std::make_shared<std::string>("dp");
        auto cap = std::make_shared<int>(kDefaultBruteCap);
        sub->add_option("--n", *n, "sequence length")->required()->check(CLI::PositiveNumber);
        sub->add_option("--method", *method)->check(CLI::IsMember({"dp", "brute", "both"}));
        sub->add_option("--cap", *cap, "brute-force length cap");
        arm(sub, [=, &params]() {
            params = Json{{"n", *n}, {"method", *method}};
            Json result{{"n", *n}, {"method", *method}};
            Outcome out;
            if (*method == "dp") {
                result["count"] = count_bbs(*n).str();
            } else if (*method == "brute") {
                result["count"] = count_bbs_brute(*n, *cap).str();
            } else {
                BigInt dp = count_bbs(*n), brute = count_bbs_brute(*n, *cap);
                result["count"] = dp.str();
                result["count_dp"] = dp.str();
                result["count_brute"] = brute.str();
                result["match"] = dp == brute;
                if (dp != brute) out.exit_code = 1;
            }
            out.result = std::move(result);
            return out;
        });
    }

    // --- enumerate -----------------------------------------------------------
    {
        auto* sub = app.add_subcommand("enumerate", "list ballot sequences of length n");
        auto n = std::make_shared<int>(1);
        auto cap = std::make_shared<int>(kDefaultBruteCap);
        sub->add_option("--n", *n)->required()->check(CLI::PositiveNumber);
        sub->add_option("--cap", *cap, "brute-force length cap");
        arm(sub, [=, &params]() {
            params = Json{{"n", *n}};
            auto seqs = enumerate_bbs(*n, *cap);
            Json arr = Json::array();
            std::string tsv;
            for (const auto& b : seqs) {
                arr.push_back(b.str());
                tsv += b.str() + "\n";
            }
            return Outcome{Json{{"n", *n}, {"count", seqs.size()}, {"sequences", std::move(arr)}},
                           std::move(tsv), 0};
        });
    }

    // --- check ---------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("check", "test the two-sided ballot property");
        auto bits = std::make_shared<std::string>();
        sub->add_option("--bits", *bits, "word over {0,1}")->required();
        arm(sub, [=, &params]() {
            params = Json{{"bits", *bits}};
            BitSequence b(*bits);
            return Outcome{Json{{"bits", b.str()},
                                {"is_bbs", is_bbs(b)},
                                {"heights", bbs_to_path(b).heights}},
                           "", 0};
        });
    }

    // --- sumset ----------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("sumset", "sumset/difference-set fullness of the one-positions");
        auto bits = std::make_shared<std::string>();
        sub->add_option("--bits", *bits)->required();
        arm(sub, [=, &params]() {
            params = Json{{"bits", *bits}};
            auto rep = sumset_fullness(BitSequence(*bits));
            return Outcome{Json{{"bits", *bits},
                                {"sumset_full", rep.sumset_full},
                                {"diffset_full", rep.diffset_full},
                                {"sumset", rep.sumset},
                                {"diffset", rep.diffset}},
                           "", 0};
        });
    }

    // --- ratio ---------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("ratio", "exact n*B_n/2^n");
        auto n = std::make_shared<int>(1);
        sub->add_option("--n", *n)->required()->check(CLI::PositiveNumber);
        arm(sub, [=, &params]() {
            params = Json{{"n", *n}};
            return Outcome{Json{{"n", *n},
                                {"count", count_bbs(*n).str()},
                                {"ratio", rational_str(bbs_ratio(*n))}},
                           "", 0};
        });
    }

    // --- ballots ---------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("ballots", "the ballot vectors spanning the cone");
        auto n = std::make_shared<int>(2);
        sub->add_option("--n", *n)->required()->check(CLI::PositiveNumber);
        arm(sub, [=, &params]() {
            params = Json{{"n", *n}};
            Json left = Json::array(), right = Json::array();
            for (const auto& w : ballot_vectors(*n))
                (w.kind == BallotVector::Kind::left ? left : right).push_back(w.entries);
            return Outcome{Json{{"n", *n}, {"left", std::move(left)}, {"right", std::move(right)}}, "", 0};
        });
    }

    // --- member ----------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("member", "cone/polytope membership of a gap vector");
        auto vec = std::make_shared<std::string>();
        sub->add_option("--vector", *vec, "comma-separated rationals")->required();
        arm(sub, [=, &params]() {
            GapVector v = parse_vector_arg(*vec);
            params = Json{{"vector", gap_vector_json(v)}};
            Json result = membership_json(membership(v));
            result["vector"] = gap_vector_json(v);
            return Outcome{std::move(result), "", 0};
        });
    }

    // --- gerrymander -------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("gerrymander",
                                       "measure-theoretic two-sided majority test for an interval family");
        auto eps = std::make_shared<std::string>();
        sub->add_option("--endpoints", *eps, "2n weakly increasing rationals, first 0")->required();
        arm(sub, [=, &params]() {
            IntervalFamily fam(parse_rational_list(*eps));
            params = Json{{"endpoints", *eps}};
            Json endpoints = Json::array();
            for (const auto& e : fam.endpoints()) endpoints.push_back(rational_str(e));
            return Outcome{Json{{"endpoints", std::move(endpoints)},
                                {"is_gerrymander", is_gerrymander_measure(fam)},
                                {"gap_vector", gap_vector_json(gaps_from_intervals(fam))}},
                           "", 0};
        });
    }

    // --- intervals -----------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("intervals", "interval family of a non-negative gap vector");
        auto vec = std::make_shared<std::string>();
        sub->add_option("--vector", *vec)->required();
        arm(sub, [=, &params]() {
            GapVector v = parse_vector_arg(*vec);
            params = Json{{"vector", gap_vector_json(v)}};
            IntervalFamily fam = intervals_from_gaps(v);
            Json endpoints = Json::array();
            for (const auto& e : fam.endpoints()) endpoints.push_back(rational_str(e));
            return Outcome{Json{{"vector", gap_vector_json(v)}, {"endpoints", std::move(endpoints)}}, "", 0};
        });
    }

    // --- rotate ----------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("rotate", "left-rotate a gap vector");
        auto vec = std::make_shared<std::string>();
        auto k = std::make_shared<int>(0);
        sub->add_option("--vector", *vec)->required();
        sub->add_option("--k", *k, "left-rotation amount")->required();
        arm(sub, [=, &params]() {
            GapVector v = parse_vector_arg(*vec);
            params = Json{{"vector", gap_vector_json(v)}, {"k", *k}};
            return Outcome{Json{{"vector", gap_vector_json(v)},
                                {"k", *k},
                                {"rotated", gap_vector_json(rotate(v, *k))}},
                           "", 0};
        });
    }

    // --- cut -------------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("cut", "cut a necklace of non-negative beads into the cone");
        auto vec = std::make_shared<std::string>();
        sub->add_option("--necklace", *vec, "comma-separated non-negative rationals, odd count")->required();
        arm(sub, [=, &params]() {
            GapVector v = parse_vector_arg(*vec);
            params = Json{{"necklace", gap_vector_json(v)}};
            NecklaceCut cut = cut_necklace(v);
            return Outcome{Json{{"necklace", gap_vector_json(v)},
                                {"cuts", cut.cuts},
                                {"canonical", cut.canonical},
                                {"unique", cut.unique},
                                {"rotation", gap_vector_json(cut.rotation)},
                                {"argmin_cut", cut.argmin_cut}},
                           "", 0};
        });
    }

    // --- classify -----------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("classify", "rotation regions of a point of the unit cube");
        auto vec = std::make_shared<std::string>();
        sub->add_option("--vector", *vec)->required();
        arm(sub, [=, &params]() {
            GapVector v = parse_vector_arg(*vec);
            params = Json{{"vector", gap_vector_json(v)}};
            auto rep = classify_partition(v);
            return Outcome{Json{{"vector", gap_vector_json(v)},
                                {"regions", rep.regions},
                                {"generic", rep.generic}},
                           "", 0};
        });
    }

    // --- volume --------------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("volume", "Monte-Carlo volume of the ballot polytope");
        auto n = std::make_shared<int>(2);
        auto samples = std::make_shared<std::uint64_t>(1000000);
        auto seed = std::make_shared<std::uint64_t>(default_seed());
        sub->add_option("--n", *n)->required()->check(CLI::PositiveNumber);
        sub->add_option("--samples", *samples)->check(CLI::PositiveNumber);
        sub->add_option("--seed", *seed, "RNG seed (default BALLOTOPE_SEED or 12345)");
        arm(sub, [=, &params, &threads]() {
            params = Json{{"n", *n}, {"samples", *samples}, {"seed", *seed}};
            auto est = mc_volume(*n, *samples, *seed, threads);
            return Outcome{Json{{"n", *n},
                                {"m", 2 * *n - 1},
                                {"samples", est.samples},
                                {"seed", *seed},
                                {"hits", est.hits},
                                {"estimate", est.estimate},
                                {"stderr", est.stderr_},
                                {"exact", rational_str(Rational(1, 2 * *n - 1))}},
                           "", 0};
        });
    }

    // --- vertices ---------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("vertices", "polytope vertices (all of them cube vertices)");
        auto n = std::make_shared<int>(2);
        auto cap = std::make_shared<int>(kDefaultVertexCap);
        auto interior_only = std::make_shared<bool>(false);
        auto with_bbs = std::make_shared<bool>(false);
        sub->add_option("--n", *n)->required()->check(CLI::PositiveNumber);
        sub->add_option("--cap", *cap, "enumeration cap on n");
        sub->add_flag("--interior", *interior_only, "only cone-interior vertices");
        sub->add_flag("--bbs", *with_bbs, "attach the ballot-sequence image of each vertex");
        arm(sub, [=, &params]() {
            params = Json{{"n", *n}, {"interior", *interior_only}, {"bbs", *with_bbs}};
            VertexSet set = enumerate_vertices(*n, *cap);
            Json verts = Json::array();
            std::string tsv;
            for (size_t i = 0; i < set.size(); ++i) {
                if (*interior_only && !set.is_interior(i)) continue;
                GapVector v = set.vertex(i);
                Json row;
                std::string coords;
                for (int j = 0; j < v.size(); ++j) {
                    if (j) coords += ',';
                    coords += v[j] == 1 ? '1' : '0';
                }
                row["coords"] = gap_vector_json(v);
                row["interior"] = set.is_interior(i);
                tsv += coords + "\t" + (set.is_interior(i) ? "interior" : "boundary");
                if (*with_bbs) {
                    std::string image = vertex_to_bbs(v).str();
                    row["bbs"] = image;
                    tsv += "\t" + image;
                    if (set.is_interior(i) && *n >= 2) {
                        std::string inner = interior_vertex_to_bbs(v).str();
                        row["interior_bbs"] = inner;
                        tsv += "\t" + inner;
                    }
                }
                tsv += "\n";
                verts.push_back(std::move(row));
            }
            return Outcome{Json{{"n", *n},
                                {"count", set.size()},
                                {"interior_count", set.interior_count()},
                                {"vertices", std::move(verts)}},
                           std::move(tsv), 0};
        });
    }

    // --- tobbs ---------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("tobbs", "ballot sequence of a polytope vertex");
        auto vec = std::make_shared<std::string>();
        auto interior = std::make_shared<bool>(false);
        sub->add_option("--vertex", *vec, "0/1 coordinates, comma-separated")->required();
        sub->add_flag("--interior", *interior, "use the unbuffered interior map (length 2n-1)");
        arm(sub, [=, &params]() {
            GapVector v = parse_vector_arg(*vec);
            params = Json{{"vertex", gap_vector_json(v)}, {"interior", *interior}};
            BitSequence b = *interior ? interior_vertex_to_bbs(v) : vertex_to_bbs(v);
            return Outcome{Json{{"vertex", gap_vector_json(v)}, {"bits", b.str()}}, "", 0};
        });
    }

    // --- tovertex -----------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("tovertex", "polytope vertex of a ballot sequence (odd length >= 5)");
        auto bits = std::make_shared<std::string>();
        sub->add_option("--bits", *bits)->required();
        arm(sub, [=, &params]() {
            params = Json{{"bits", *bits}};
            GapVector v = bbs_to_vertex(BitSequence(*bits));
            return Outcome{Json{{"bits", *bits}, {"vertex", gap_vector_json(v)}}, "", 0};
        });
    }

    // --- slope ---------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("slope", "slope vector and node values of a gap vector");
        auto vec = std::make_shared<std::string>();
        auto alpha = std::make_shared<bool>(false);
        sub->add_option("--vector", *vec)->required();
        sub->add_flag("--alpha", *alpha, "buffer the vector with [1,0 ... 0,1] first");
        arm(sub, [=, &params]() {
            GapVector v = parse_vector_arg(*vec);
            params = Json{{"vector", gap_vector_json(v)}, {"alpha", *alpha}};
            Json result{{"vector", gap_vector_json(v)}};
            if (*alpha) {
                GapVector padded = pad_alpha(v);
                result["padded"] = gap_vector_json(padded);
                v = padded;
            }
            SlopePath p = slope_vector(v);
            Json slopes = Json::array(), values = Json::array();
            for (const auto& s : p.slopes) slopes.push_back(rational_str(s));
            for (const auto& f : p.values) values.push_back(rational_str(f));
            result["slopes"] = std::move(slopes);
            result["values"] = std::move(values);
            return Outcome{std::move(result), "", 0};
        });
    }

    // --- bounds -------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("bounds", "exact two-sided bounds on B_l for odd l");
        auto max_l = std::make_shared<int>(29);
        auto min_l = std::make_shared<int>(1);
        sub->add_option("--max-l", *max_l)->required()->check(CLI::PositiveNumber);
        sub->add_option("--min-l", *min_l)->check(CLI::PositiveNumber);
        arm(sub, [=, &params]() {
            params = Json{{"min_l", *min_l}, {"max_l", *max_l}};
            auto rows = verify_bounds(*min_l, *max_l);
            Json arr = Json::array();
            std::string tsv = "l\tcount\tlower\tupper\tpass\n";
            bool all_pass = true;
            for (const auto& row : rows) {
                all_pass = all_pass && row.pass;
                Json j{{"l", row.ell},
                       {"count", row.count.str()},
                       {"lower", row.lower ? Json(rational_str(*row.lower)) : Json(nullptr)},
                       {"upper", rational_str(row.upper)},
                       {"pass", row.pass}};
                tsv += std::to_string(row.ell) + "\t" + row.count.str() + "\t" +
                       (row.lower ? rational_str(*row.lower) : "-") + "\t" + rational_str(row.upper) +
                       "\t" + (row.pass ? "pass" : "FAIL") + "\n";
                arr.push_back(std::move(j));
            }
            return Outcome{Json{{"rows", std::move(arr)}, {"all_pass", all_pass}}, std::move(tsv),
                           all_pass ? 0 : 1};
        });
    }

    // --- system -------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("system", "H-representation of the polytope");
        auto n = std::make_shared<int>(2);
        sub->add_option("--n", *n)->required()->check(CLI::PositiveNumber);
        arm(sub, [=, &params]() {
            params = Json{{"n", *n}};
            ConstraintSystem cs = constraint_system(*n);
            return Outcome{Json{{"n", cs.n}, {"m", cs.m}, {"rows", cs.rows}, {"rhs", cs.rhs}}, "", 0};
        });
    }

    // --- eliminate -----------------------------------------------------------
    {
        auto* sub = app.add_subcommand("eliminate",
                                       "integer Gauss-Jordan trace (rows only swapped, negated, subtracted)");
        auto matrix = std::make_shared<std::string>();
        sub->add_option("--matrix", *matrix, "rows separated by ';', entries by ','")->required();
        arm(sub, [=, &params]() {
            IntMatrix m = parse_matrix_arg(*matrix);
            params = Json{{"matrix", *matrix}};
            auto trace = flat_elimination(m);
            Json steps = Json::array();
            for (const auto& s : trace.steps) steps.push_back(int_matrix_json(s));
            return Outcome{Json{{"matrix", int_matrix_json(m)},
                                {"steps", std::move(steps)},
                                {"all_flat", trace.all_flat},
                                {"singular", trace.singular},
                                {"determinant", trace.determinant.str()}},
                           "", 0};
        });
    }

    // --- unimodular ----------------------------------------------------------
    {
        auto* sub = app.add_subcommand("unimodular",
                                       "exhaustive |det| = 1 and flat-trace check over m-row subsets");
        auto n = std::make_shared<int>(2);
        sub->add_option("--n", *n)->required()->check(CLI::Range(1, 4));
        arm(sub, [=, &params, &threads]() {
            params = Json{{"n", *n}};
            auto progress = [](std::uint64_t done, std::uint64_t total) {
                std::cerr << "\r" << done << "/" << total << " subsets" << (done == total ? "\n" : "");
            };
            auto rep = verify_unimodularity(*n, threads, progress);
            bool pass = rep.all_unimodular && rep.all_flat;
            return Outcome{Json{{"n", *n},
                                {"submatrices_tested", rep.submatrices_tested},
                                {"invertible_count", rep.invertible_count},
                                {"all_unimodular", rep.all_unimodular},
                                {"all_flat", rep.all_flat}},
                           "", pass ? 0 : 1};
        });
    }

    // --- bfs -----------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("bfs", "basic feasible solutions of the constraint system");
        auto n = std::make_shared<int>(2);
        sub->add_option("--n", *n)->required()->check(CLI::Range(1, 3));
        arm(sub, [=, &params]() {
            params = Json{{"n", *n}};
            Json arr = Json::array();
            std::string tsv;
            for (const auto& v : basic_feasible_solutions(*n)) {
                arr.push_back(gap_vector_json(v));
                for (int j = 0; j < v.size(); ++j) tsv += (j ? "," : "") + rational_str(v[j]);
                tsv += "\n";
            }
            return Outcome{Json{{"n", *n}, {"solutions", std::move(arr)}}, std::move(tsv), 0};
        });
    }

    // --- verify ----------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("verify", "run the invariant suite");
        auto level = std::make_shared<std::string>("quick");
        auto seed = std::make_shared<std::uint64_t>(default_seed());
        sub->add_option("--level", *level)->check(CLI::IsMember({"quick", "full"}));
        sub->add_option("--seed", *seed, "RNG seed for the property checks");
        arm(sub, [=, &params, &threads]() {
            params = Json{{"level", *level}, {"seed", *seed}};
            auto on_check = [](const CheckResult& r) {
                std::cerr << (r.pass ? "[ok]   " : "[FAIL] ") << r.name
                          << (r.detail.empty() ? "" : " — " + r.detail) << "\n";
            };
            VerifyReport rep = run_verify_suite(*level == "full" ? VerifyLevel::full : VerifyLevel::quick,
                                                *seed, threads, nullptr, on_check);
            Json checks = Json::array();
            std::string tsv;
            for (const auto& c : rep.checks) {
                checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                tsv += c.name + "\t" + (c.pass ? "pass" : "FAIL") + "\t" + c.detail + "\n";
            }
            Json result{{"level", *level}, {"seed", *seed}, {"checks", std::move(checks)},
                        {"all_pass", rep.all_pass}};
            if (!rep.ratios.empty()) {
                Json ratios = Json::array();
                for (const auto& [n, r] : rep.ratios)
                    ratios.push_back(Json{{"n", n}, {"ratio", rational_str(r)}});
                result["ratios"] = std::move(ratios);
            }
            return Outcome{std::move(result), std::move(tsv), rep.all_pass ? 0 : 1};
        });
    }

    // --- plot ----------------------------------------------------------------
    {
        auto* sub = app.add_subcommand("plot", "SVG of a ballot word's path or a gap vector's graph");
        auto bits = std::make_shared<std::string>();
        auto vec = std::make_shared<std::string>();
        auto out_path = std::make_shared<std::string>();
        auto alpha = std::make_shared<bool>(false);
        auto bits_opt = sub->add_option("--bbs", *bits, "word over {0,1}");
        auto vec_opt = sub->add_option("--vector", *vec, "gap vector");
        sub->add_option("--out", *out_path, "output .svg path")->required();
        sub->add_flag("--alpha", *alpha, "buffer a vector before plotting");
        bits_opt->excludes(vec_opt);
        arm(sub, [=, &params]() {
            if (bits->empty() == vec->empty())
                throw std::invalid_argument("plot: exactly one of --bbs/--vector is required");
            std::string svg;
            if (!bits->empty()) {
                params = Json{{"bbs", *bits}, {"out", *out_path}};
                svg = render_height_path(bbs_to_path(BitSequence(*bits)));
            } else {
                params = Json{{"vector", *vec}, {"alpha", *alpha}, {"out", *out_path}};
                GapVector v = parse_vector_arg(*vec);
                if (*alpha) v = pad_alpha(v);
                svg = render_slope_path(slope_vector(v), *alpha);
            }
            std::ofstream file(*out_path, std::ios::binary);
            if (!file) throw std::invalid_argument("plot: cannot open " + *out_path);
            file << svg;
            return Outcome{Json{{"out", *out_path}, {"bytes", svg.size()}}, "", 0};
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = run();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    }
    const auto stop = std::chrono::steady_clock::now();
    const double elapsed =
        timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;

    if (format == "tsv") {
        std::cout << (out.tsv.empty() ? flatten_tsv(out.result) : out.tsv);
    } else {
        std::cout << make_envelope(command, params, out.result, elapsed).dump(2) << "\n";
    }
    return out.exit_code;
}
