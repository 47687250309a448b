#include <CLI11.hpp>
#include <json.hpp>

#include "kron/cache.hpp"
#include "kron/cayley.hpp"
#include "kron/charkron.hpp"
#include "kron/cube.hpp"
#include "kron/latin.hpp"
#include "kron/lefschetz.hpp"
#include "kron/seqlab.hpp"
#include "kron/verify.hpp"

#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using json = nlohmann::json;
using namespace kron;

namespace {

struct GlobalFlags {
    int jobs = 0;
    bool compact = false;
};

void emit(const json& j, const GlobalFlags& flags) {
    if (flags.compact) std::cout << j.dump() << "\n";
    else std::cout << j.dump(2) << "\n";
}

json cells_json(const Cube& cube, const std::vector<uint32_t>& cells) {
    json out = json::array();
    for (uint32_t r : cells) out.push_back(cube.coords(r));
    return out;
}

json multivector_json(const Multivector& v) {
    json terms = json::array();
    for (const auto& [key, c] : v.terms())
        terms.push_back({{"cells", cells_json(v.cube(), key)}, {"coefficient", to_dec(c)}});
    return terms;
}

json sequence_json(const KroneckerSequence& seq) {
    ShapeReport rep = shape_report(seq);
    json values = json::array();
    for (const Int& v : seq.values) values.push_back(to_dec(v));
    json logconcave = json::array();  // as n-values, not offsets
    for (int i : rep.log_concave_indices) logconcave.push_back(seq.range.lo + i);
    return json{{"tuple", seq.base.to_string()},
                {"d", seq.d},
                {"k", seq.k},
                {"range", {seq.range.lo, seq.range.hi}},
                {"values", values},
                {"backends", seq.backends},
                {"unimodal", rep.unimodal},
                {"symmetric", rep.symmetric},
                {"logconcave", logconcave}};
}

json lp_json(const LpVerdict& v) {
    json dims = json::array(), ranks = json::array();
    for (const Int& x : v.dims) dims.push_back(to_dec(x));
    for (int r : v.ranks) ranks.push_back(r);
    return json{{"lambda", v.base.to_string()}, {"d", v.d},        {"k", v.k},
                {"range", {v.range.lo, v.range.hi}}, {"dims", dims},   {"ranks", ranks},
                {"pivot", v.pivot},              {"holds", v.holds}};
}

json hlp_json(const HlpVerdict& v) {
    json pairs = json::array();
    for (const auto& p : v.pairs)
        pairs.push_back({{"n", p.n},
                         {"nstar", p.nstar},
                         {"dims", {to_dec(p.dim_low), to_dec(p.dim_high)}},
                         {"rank", p.rank},
                         {"isomorphism", p.isomorphism}});
    return json{{"lambda", v.base.to_string()},
                {"d", v.d},
                {"k", v.k},
                {"pairs", pairs},
                {"holds", v.holds}};
}

json lp_full_json(const LpFullVerdict& v) {
    json degrees = json::array();
    for (const auto& deg : v.degrees)
        degrees.push_back({{"n", deg.n},
                           {"dim_src", to_dec(deg.dim_src)},
                           {"dim_dst", to_dec(deg.dim_dst)},
                           {"rank", to_dec(deg.rank)},
                           {"full", deg.full}});
    json out{{"d", v.d}, {"k", v.k}, {"mode", v.mode}, {"holds", v.holds}};
    if (!v.witness.empty()) out["witness"] = v.witness;
    if (!v.degrees.empty()) out["degrees"] = degrees;
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact Kronecker / Lefschetz / Alon-Tarsi toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // --jobs / --json may follow the subcommand
    GlobalFlags flags;
    app.add_option("--jobs", flags.jobs, "worker threads (default: hardware)");
    app.add_flag("--json", flags.compact, "compact single-line JSON output");

    std::string cache_dir = cache_dir_from_env();

    // ---- coeff ----
    auto* coeff = app.add_subcommand("coeff", "one Kronecker coefficient");
    int c_d = 3, c_k = 0;
    std::string c_tuple, c_backend = "auto";
    long long c_budget = kDefaultKernelBudget;
    coeff->add_option("--d", c_d, "number of tensor factors");
    coeff->add_option("--k", c_k, "local dimension (defaults to max part)");
    coeff->add_option("--tuple", c_tuple, "partition tuple, e.g. \"4,2;2,2,2;3,2,1\"")
        ->required();
    coeff->add_option("--backend", c_backend, "hwv | characters | both | auto");
    coeff->add_option("--budget", c_budget, "weight-space size budget for hwv");

    // ---- sequence ----
    auto* seqc = app.add_subcommand("sequence", "the sequence {g(rho_k^n lambda)}");
    int s_d = 3, s_k = 0;
    std::string s_tuple, s_backend = "auto";
    seqc->add_option("--d", s_d, "number of tensor factors");
    seqc->add_option("--k", s_k, "the rho_k parameter")->required();
    seqc->add_option("--tuple", s_tuple, "base partition tuple")->required();
    seqc->add_option("--backend", s_backend, "hwv | characters | auto");

    // ---- at ----
    auto* atc = app.add_subcommand("at", "Alon-Tarsi number of a type or [k]^d");
    int a_d = 3, a_k = 2, a_budget = kAtCellBudget;
    std::string a_type;
    atc->add_option("--d", a_d, "cube dimension");
    atc->add_option("--k", a_k, "cube side");
    atc->add_option("--type", a_type, "digit-string type, e.g. \"111,222\" (default [k]^d)");
    atc->add_option("--budget", a_budget, "cell budget");

    // ---- omega-power ----
    auto* omegac = app.add_subcommand("omega-power", "expansion of omega^n");
    int o_d = 3, o_k = 2, o_n = 1;
    omegac->add_option("--d", o_d, "cube dimension");
    omegac->add_option("--k", o_k, "cube side");
    omegac->add_option("--n", o_n, "power")->required();

    // ---- lefschetz ----
    auto* lef = app.add_subcommand("lefschetz", "lp | hlp | lp-full checks");
    lef->require_subcommand(1);
    auto* lp = lef->add_subcommand("lp", "LP along the rho_k sequence");
    auto* hlp = lef->add_subcommand("hlp", "hard LP between dimension-matched pairs");
    auto* lpfull = lef->add_subcommand("lp-full", "LP on the whole exterior algebra");
    int l_d = 3, l_k = 2;
    std::string l_tuple = ";;";
    long long l_budget = kDefaultKernelBudget;
    for (auto* sub : {lp, hlp}) {
        sub->add_option("--d", l_d, "number of tensor factors");
        sub->add_option("--k", l_k, "the rho_k parameter")->required();
        sub->add_option("--tuple", l_tuple, "base partition tuple")->required();
        sub->add_option("--budget", l_budget, "HWV kernel budget");
    }
    long long lf_budget = 24;
    lpfull->add_option("--d", l_d, "cube dimension");
    lpfull->add_option("--k", l_k, "cube side")->required();
    lpfull->add_option("--budget", lf_budget, "ambient budget for exhaustive ranks");

    // ---- sl2-check ----
    auto* sl2 = app.add_subcommand("sl2-check", "commutation relations for k = 2");
    int s2_d = 3, s2_samples = 200;
    sl2->add_option("--d", s2_d, "odd tensor-factor count");
    sl2->add_option("--samples", s2_samples, "random vectors beyond d = 3");

    // ---- magic-count ----
    auto* magic = app.add_subcommand("magic-count", "counts b_{d,k}(n) with shape verdicts");
    int m_d = 3, m_k = 2, m_n = -1;
    magic->add_option("--d", m_d, "cube dimension");
    magic->add_option("--k", m_k, "cube side");
    magic->add_option("--n", m_n, "single magnitude (default: all)");

    // ---- hodge-check ----
    auto* hodge = app.add_subcommand("hodge-check", "star involution and complement symmetry");
    int h_d = 3, h_k = 2, h_maxm = 3;
    hodge->add_option("--d", h_d, "cube dimension");
    hodge->add_option("--k", h_k, "cube side");
    hodge->add_option("--max-m", h_maxm, "tuple sizes for the complement check");

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "bounded unimodality sweep over sequence bases");
    int w_d = 3, w_k = 2, w_maxm = 4;
    sweep->add_option("--d", w_d, "number of tensor factors");
    sweep->add_option("--k", w_k, "the rho_k parameter")->required();
    sweep->add_option("--max-m", w_maxm, "largest base size");

    // ---- verify-paper ----
    auto* verify = app.add_subcommand("verify-paper", "run the published-result suite");
    bool v_long = false, v_progress = false;
    verify->add_flag("--long", v_long, "include the long sequence tails");
    verify->add_flag("--progress", v_progress, "progress lines on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

#ifdef _OPENMP
    if (flags.jobs > 0) omp_set_num_threads(flags.jobs);
#endif

    CoeffCache coeff_cache(cache_dir);
    CharCache char_cache(cache_dir);
    PartialsCache partials(cache_dir);

    if (*coeff) {
        PartitionTuple t = PartitionTuple::parse(c_tuple);
        if (c_k == 0) c_k = std::max(1, t.max_part());
        if (c_d != t.d()) throw std::invalid_argument("--d does not match the tuple length");
        SequenceOptions opts;
        opts.coeff_cache = &coeff_cache;
        opts.charkron.char_cache = &char_cache;
        opts.charkron.partials = &partials;
        json out{{"tuple", t.to_string()}, {"d", c_d}, {"k", c_k}};
        if (c_backend == "both") {
            Int h = kronecker_hwv(t, c_d, c_k, c_budget);
            Int c = kronecker_characters(t, opts.charkron);
            out["values"] = {{"hwv", to_dec(h)}, {"characters", to_dec(c)}};
            out["agree"] = h == c;
            out["value"] = to_dec(c);
            emit(out, flags);
            return h == c ? 0 : 3;
        }
        if (c_backend == "hwv") opts.backend = Backend::kHwv;
        else if (c_backend == "characters") opts.backend = Backend::kCharacters;
        else opts.backend = Backend::kAuto;
        std::string used;
        Int v = kronecker_coefficient(t, c_d, c_k, opts, &used);
        out["value"] = to_dec(v);
        out["backend"] = used;
        emit(out, flags);
        return 0;
    }

    if (*seqc) {
        PartitionTuple t = PartitionTuple::parse(s_tuple);
        if (s_d != t.d()) throw std::invalid_argument("--d does not match the tuple length");
        SequenceOptions opts;
        opts.coeff_cache = &coeff_cache;
        opts.charkron.char_cache = &char_cache;
        opts.charkron.partials = &partials;
        if (s_backend == "hwv") opts.backend = Backend::kHwv;
        else if (s_backend == "characters") opts.backend = Backend::kCharacters;
        else opts.backend = Backend::kAuto;
        KroneckerSequence seq = build_sequence(t, s_d, s_k, opts);
        emit(sequence_json(seq), flags);
        return 0;
    }

    if (*atc) {
        Cube cube(a_d, a_k);
        CubeSet type = a_type.empty() ? full_cube(cube) : CubeSet::parse(cube, a_type);
        SignedCount sc = at_number(type, a_budget);
        emit(json{{"type", type.to_string()},
                  {"d", a_d},
                  {"k", a_k},
                  {"positive", to_dec(sc.positive)},
                  {"negative", to_dec(sc.negative)},
                  {"at", to_dec(sc.at())}},
             flags);
        return 0;
    }

    if (*omegac) {
        Multivector p = omega_power(o_d, o_k, o_n);
        emit(json{{"d", o_d},
                  {"k", o_k},
                  {"n", o_n},
                  {"num_terms", p.num_terms()},
                  {"terms", multivector_json(p)}},
             flags);
        return 0;
    }

    if (*lp) {
        LpVerdict v = check_lp(PartitionTuple::parse(l_tuple), l_d, l_k, l_budget);
        emit(lp_json(v), flags);
        return 0;
    }
    if (*hlp) {
        HlpVerdict v = check_hlp(PartitionTuple::parse(l_tuple), l_d, l_k, l_budget);
        emit(hlp_json(v), flags);
        return 0;
    }
    if (*lpfull) {
        LpFullVerdict v = check_lp_full(l_d, l_k, lf_budget);
        emit(lp_full_json(v), flags);
        return 0;
    }

    if (*sl2) {
        Sl2Report rep = sl2_check(s2_d, s2_samples);
        emit(json{{"d", rep.d},
                  {"holds", rep.holds},
                  {"checked", rep.checked},
                  {"failures", rep.failures}},
             flags);
        return rep.holds ? 0 : 3;
    }

    if (*magic) {
        Cube cube(m_d, m_k);
        long long top = cube.num_cells() / m_k;
        json counts = json::array();
        std::vector<Int> values;
        int lo = m_n >= 0 ? m_n : 0;
        int hi = m_n >= 0 ? m_n : static_cast<int>(top);
        for (int n = lo; n <= hi; ++n) {
            Int c = count_magic_sets(m_d, m_k, n);
            values.push_back(c);
            counts.push_back({{"n", n}, {"count", to_dec(c)}});
        }
        json out{{"d", m_d}, {"k", m_k}, {"counts", counts}};
        if (m_n < 0) {
            ShapeReport rep = shape_report(values);
            out["unimodal"] = rep.unimodal;
            out["symmetric"] = rep.symmetric;
        }
        emit(out, flags);
        return 0;
    }

    if (*hodge) {
        Cube cube(h_d, h_k);
        // star . star = +-id on every basis vector of small cubes
        long long checked = 0;
        bool star_ok = true;
        if (cube.num_cells() <= 10) {
            for (uint64_t bits = 0; bits < (uint64_t(1) << cube.num_cells()); ++bits) {
                std::vector<uint32_t> cells;
                for (long long i = 0; i < cube.num_cells(); ++i)
                    if (bits >> i & 1) cells.push_back(static_cast<uint32_t>(i));
                int n = static_cast<int>(cells.size());
                Multivector v = Multivector::basis(CubeSet(cube, cells));
                Int sign = (static_cast<long long>(n) * (cube.num_cells() - n)) % 2 == 0 ? 1 : -1;
                if (!(hodge_star(hodge_star(v)) == v * sign)) star_ok = false;
                ++checked;
            }
        }
        // g(lambda) = g(complement) for all tuples of size <= max-m
        long long slice = cube.num_cells() / h_k;
        json pairs = json::array();
        bool sym_ok = true;
        for (int m = 0; m <= h_maxm; ++m) {
            auto parts = partitions_of(m, h_k, static_cast<int>(slice));
            std::vector<PartitionTuple> tuples;
            std::vector<Partition> cur;
            std::function<void(int)> rec = [&](int i) {
                if (i == h_d) {
                    tuples.push_back(PartitionTuple(cur));
                    return;
                }
                for (const Partition& p : parts) {
                    cur.push_back(p);
                    rec(i + 1);
                    cur.pop_back();
                }
            };
            rec(0);
            for (const PartitionTuple& t : tuples) {
                std::vector<Partition> comp;
                for (const Partition& p : t.entries())
                    comp.push_back(p.complement(static_cast<int>(slice), h_k));
                PartitionTuple tc{comp};
                Int a = kronecker_characters(t), b = kronecker_characters(tc);
                if (a != b) sym_ok = false;
                pairs.push_back({{"tuple", t.to_string()},
                                 {"complement", tc.to_string()},
                                 {"g", to_dec(a)},
                                 {"g_complement", to_dec(b)}});
            }
        }
        emit(json{{"d", h_d},
                  {"k", h_k},
                  {"star_checked", checked},
                  {"star_ok", star_ok},
                  {"complement_ok", sym_ok},
                  {"pairs", pairs}},
             flags);
        return (star_ok && sym_ok) ? 0 : 3;
    }

    if (*sweep) {
        SequenceOptions opts;
        opts.coeff_cache = &coeff_cache;
        opts.charkron.char_cache = &char_cache;
        auto entries = sweep_sequences(w_d, w_k, w_maxm, opts);
        json arr = json::array();
        long long unimodal = 0, symmetric = 0;
        for (const auto& e : entries) {
            if (e.shape.unimodal) ++unimodal;
            if (e.shape.symmetric) ++symmetric;
            arr.push_back(sequence_json(e.seq));
            arr.back()["complementary"] = e.complementary;
        }
        emit(json{{"d", w_d},
                  {"k", w_k},
                  {"max_m", w_maxm},
                  {"bases", entries.size()},
                  {"unimodal", unimodal},
                  {"symmetric", symmetric},
                  {"sequences", arr}},
             flags);
        return 0;
    }

    if (*verify) {
        VerifyOptions opts;
        opts.long_mode = v_long;
        opts.progress = v_progress;
        opts.cache_dir = cache_dir;
        VerifyStats stats;
        auto results = verify_paper(opts, &stats);
        json arr = json::array();
        for (const auto& r : results) {
            std::cerr << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name
                      << " (" << r.detail << ")\n";
            arr.push_back({{"id", r.id},
                           {"name", r.name},
                           {"passed", r.passed},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
        }
        bool ok = all_passed(results);
        emit(json{{"criteria", arr},
                  {"all_passed", ok},
                  {"cache", {{"coeff_hits", stats.coeff_hits},
                             {"coeff_misses", stats.coeff_misses},
                             {"char_hits", stats.char_hits},
                             {"char_misses", stats.char_misses}}}},
             flags);
        return ok ? 0 : 3;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
