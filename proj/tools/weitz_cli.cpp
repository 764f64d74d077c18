#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weitz/context.hpp"
#include "weitz/cpoly.hpp"
#include "weitz/derivation.hpp"
#include "weitz/generic2x2.hpp"
#include "weitz/io.hpp"
#include "weitz/kernel.hpp"
#include "weitz/ncpoly.hpp"
#include "weitz/series.hpp"
#include "weitz/sl2gens.hpp"
#include "weitz/verify.hpp"

using nlohmann::ordered_json;
using namespace weitz;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

Rat parse_rat(const std::string& text) {
    try {
        Rat r(strip(text));
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        throw UsageError("invalid rational number: '" + text + "'");
    }
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    for (const auto& piece : split(text, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(strip(piece), &pos);
            if (pos != strip(piece).size()) throw std::invalid_argument("trailing");
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
        }
    }
    return out;
}

std::vector<std::vector<Rat>> parse_matrix(const std::string& text) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& row : split(text, ';')) {
        std::vector<Rat> r;
        for (const auto& cell : split(row, ',')) r.push_back(parse_rat(cell));
        rows.push_back(r);
    }
    for (const auto& r : rows)
        if (r.size() != rows.size())
            throw UsageError("matrix must be square; rows separated by ';', entries by ','");
    return rows;
}

LinearDerivation derivation_from_flags(const std::string& jordan, const std::string& matrix) {
    if (!jordan.empty() && !matrix.empty())
        throw UsageError("--jordan and --matrix are mutually exclusive");
    if (!jordan.empty()) {
        JordanType jt;
        try {
            jt = JordanType::parse(jordan);
        } catch (const std::exception& e) {
            throw UsageError(std::string("invalid --jordan: ") + e.what());
        }
        return LinearDerivation::from_jordan(jt);
    }
    if (!matrix.empty()) {
        try {
            return LinearDerivation::from_matrix(parse_matrix(matrix));
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception& e) {
            throw UsageError(std::string("invalid --matrix: ") + e.what());
        }
    }
    throw UsageError("one of --jordan or --matrix is required");
}

AlgebraContext context_from_flags(const std::string& algebra, int rank, int derivation_rank) {
    if (algebra == "free") return AlgebraContext::free_assoc(derivation_rank);
    if (algebra == "comm") return AlgebraContext::commutative(derivation_rank);
    if (algebra == "metabelian2") return AlgebraContext::metabelian2();
    if (algebra == "grassmann-l2") {
        if (rank != 2 && rank != 3) throw UsageError("grassmann-l2 supports --rank 2 or 3");
        return AlgebraContext::grassmann_l2(rank);
    }
    if (algebra == "wreath") {
        if (rank < 2) throw UsageError("wreath requires --rank >= 2");
        return AlgebraContext::wreath(rank);
    }
    if (algebra == "trace2x2") return AlgebraContext::trace2x2();
    throw UsageError("unknown --algebra: '" + algebra + "'");
}

std::string rat_str(const Rat& r) { return r.get_str(); }

// --- constants ------------------------------------------------------------

struct ConstantsArgs {
    std::string algebra = "free";
    int rank = 2;
    std::string jordan, matrix;
    int degree = -1;
    std::string bidegree, multidegree;
    std::string format = "text";
};

int cmd_constants(const ConstantsArgs& a) {
    LinearDerivation d = derivation_from_flags(a.jordan, a.matrix);
    AlgebraContext ctx = context_from_flags(a.algebra, a.rank, d.m());
    if (d.m() != ctx.rank())
        throw UsageError("derivation acts on " + std::to_string(d.m()) +
                         " variables but the algebra has rank " + std::to_string(ctx.rank()));

    int selectors = (a.degree >= 0 ? 1 : 0) + (a.bidegree.empty() ? 0 : 1) +
                    (a.multidegree.empty() ? 0 : 1);
    if (selectors != 1)
        throw UsageError("exactly one of --degree, --bidegree, --multidegree is required");

    std::vector<CtxElem> basis;
    if (a.degree >= 0) {
        basis = kernel_layer(ctx, d, a.degree);
    } else {
        std::string text = a.bidegree.empty() ? a.multidegree : a.bidegree;
        std::vector<int> md = parse_int_list(text, "multidegree");
        if (!a.bidegree.empty() && md.size() != 2)
            throw UsageError("--bidegree takes two comma-separated integers");
        if (static_cast<int>(md.size()) != ctx.rank())
            throw UsageError("multidegree length must equal the algebra rank " +
                             std::to_string(ctx.rank()));
        for (int v : md)
            if (v < 0) throw UsageError("multidegree entries must be nonnegative");
        basis = kernel_at(ctx, d, md);
    }

    if (a.format == "json") {
        ordered_json j;
        j["dimension"] = basis.size();
        j["basis"] = ordered_json::array();
        for (const auto& e : basis) j["basis"].push_back(ctx.render(e));
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("dimension %zu\n", basis.size());
        for (const auto& e : basis) std::printf("%s\n", ctx.render(e).c_str());
    }
    return 0;
}

// --- sl2 generators -------------------------------------------------------

int cmd_sl2_generators(int degree, const std::string& format) {
    if (degree < 2) throw UsageError("--degree must be at least 2");
    std::vector<Sl2Generator> gens = sl2_generators(degree);
    std::vector<std::string> names = default_names(2);
    std::map<int, long> counts = sl2_generator_counts(gens);
    if (format == "json") {
        ordered_json j;
        j["max_degree"] = degree;
        j["count"] = gens.size();
        j["counts_by_degree"] = ordered_json::object();
        for (const auto& [d, n] : counts) j["counts_by_degree"][std::to_string(d)] = n;
        j["generators"] = ordered_json::array();
        for (const auto& g : gens) {
            ordered_json item;
            item["id"] = g.id;
            item["degree"] = g.degree;
            item["factors"] = g.factors;
            item["poly"] = to_json(g.poly, names);
            j["generators"].push_back(item);
        }
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("count %zu\n", gens.size());
        std::ostringstream cs;
        for (const auto& [d, n] : counts) cs << " " << d << ":" << n;
        std::printf("counts by degree:%s\n", cs.str().c_str());
        for (const auto& g : gens) {
            std::ostringstream fs;
            for (std::size_t i = 0; i < g.factors.size(); ++i)
                fs << (i ? " " : "") << "w" << g.factors[i];
            std::printf("w%d degree %d factors [%s]\n  %s\n", g.id, g.degree, fs.str().c_str(),
                        render(g.poly, names).c_str());
        }
    }
    return 0;
}

// --- hilbert-constants ----------------------------------------------------

int cmd_hilbert_constants(int degree, const std::string& format) {
    if (degree < 0) throw UsageError("--degree must be nonnegative");
    TruncSeries2 h = constants_hilbert_free2(degree);
    std::vector<Rat> by_degree = specialize(h, 1, 2);
    if (format == "json") {
        ordered_json j;
        j["truncation"] = degree;
        j["coefficients"] = ordered_json::array();
        for (const auto& [key, c] : h.coeffs()) {
            if (c == 0) continue;
            ordered_json item;
            item["t"] = key.first;
            item["v"] = key.second;
            item["value"] = rat_str(c);
            j["coefficients"].push_back(item);
        }
        j["dimension_by_degree"] = ordered_json::array();
        for (const auto& c : by_degree) j["dimension_by_degree"].push_back(rat_str(c));
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("truncation %d\n", degree);
        for (const auto& [key, c] : h.coeffs()) {
            if (c == 0) continue;
            std::printf("t^%d*v^%d: %s\n", key.first, key.second, rat_str(c).c_str());
        }
        for (std::size_t n = 0; n < by_degree.size(); ++n)
            std::printf("degree %zu dimension %s\n", n, rat_str(by_degree[n]).c_str());
    }
    return 0;
}

// --- schur ----------------------------------------------------------------

int cmd_schur(const std::string& lambda, int degree, const std::string& format) {
    std::vector<int> lam = parse_int_list(lambda, "--lambda");
    if (lam.size() != 2 || lam[0] < lam[1] || lam[1] < 0)
        throw UsageError("--lambda takes a partition l1,l2 with l1 >= l2 >= 0");
    int n = degree >= 0 ? degree : lam[0] + lam[1];
    TruncSeries2 s = schur2(lam[0], lam[1], n);
    if (format == "json") {
        ordered_json j;
        j["lambda"] = lam;
        j["truncation"] = n;
        j["coefficients"] = ordered_json::array();
        for (const auto& [key, c] : s.coeffs()) {
            if (c == 0) continue;
            ordered_json item;
            item["t1"] = key.first;
            item["t2"] = key.second;
            item["value"] = rat_str(c);
            j["coefficients"].push_back(item);
        }
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("schur %d,%d truncated at total degree %d\n", lam[0], lam[1], n);
        for (const auto& [key, c] : s.coeffs()) {
            if (c == 0) continue;
            std::printf("t1^%d*t2^%d: %s\n", key.first, key.second, rat_str(c).c_str());
        }
    }
    return 0;
}

// --- multiplicity ---------------------------------------------------------

int cmd_multiplicity(const std::string& algebra, int rank, int degree, const std::string& format) {
    if (degree < 0) throw UsageError("--degree must be nonnegative");
    AlgebraContext ctx = [&] {
        if (algebra == "free") return AlgebraContext::free_assoc(2);
        if (algebra == "metabelian2") return AlgebraContext::metabelian2();
        if (algebra == "grassmann-l2") {
            if (rank != 2) throw UsageError("multiplicity supports grassmann-l2 only at --rank 2");
            return AlgebraContext::grassmann_l2(2);
        }
        throw UsageError("--algebra must be free, metabelian2, or grassmann-l2");
    }();
    TruncSeries2 h = hilbert_of_context(ctx, degree);
    MultTable mt = schur_decompose(h);
    TruncSeries2 mp = mult_series_Mprime(mt, degree);
    if (format == "json") {
        ordered_json j;
        j["algebra"] = algebra;
        j["truncation"] = degree;
        j["multiplicities"] = ordered_json::array();
        for (const auto& [lam, m] : mt) {
            if (m == 0) continue;
            ordered_json item;
            item["lambda"] = {lam.first, lam.second};
            item["value"] = m;
            j["multiplicities"].push_back(item);
        }
        j["mprime"] = ordered_json::array();
        for (const auto& [key, c] : mp.coeffs()) {
            if (c == 0) continue;
            ordered_json item;
            item["t"] = key.first;
            item["v"] = key.second;
            item["value"] = rat_str(c);
            j["mprime"].push_back(item);
        }
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("algebra %s truncated at total degree %d\n", algebra.c_str(), degree);
        for (const auto& [lam, m] : mt) {
            if (m == 0) continue;
            std::printf("(%d,%d): %ld\n", lam.first, lam.second, m);
        }
        std::printf("multiplicity series in (t,v):\n");
        for (const auto& [key, c] : mp.coeffs()) {
            if (c == 0) continue;
            std::printf("t^%d*v^%d: %s\n", key.first, key.second, rat_str(c).c_str());
        }
    }
    return 0;
}

// --- exp-derivation -------------------------------------------------------

CtxElem ctxelem_from_trace(const TraceElem& e) {
    CtxElem out;
    for (int tag = 0; tag < 4; ++tag)
        for (const auto& [mono, coef] : e.comp[static_cast<std::size_t>(tag)].terms())
            out.add(BKey{tag, false, mono}, coef);
    return out;
}

struct ExpArgs {
    std::string algebra = "comm";
    std::string jordan, matrix;
    std::string w;
    std::string variant;
    std::string format = "text";
};

int cmd_exp_derivation(const ExpArgs& a) {
    if (a.algebra == "trace2x2") {
        if (a.variant != "basic" && a.variant != "chain5")
            throw UsageError("trace2x2 requires --variant basic or chain5");
        if (a.w.empty()) throw UsageError("trace2x2 requires --w over the center variables");
        CPoly w;
        try {
            w = parse_c(a.w, cbar_names());
        } catch (const std::exception& e) {
            throw UsageError(std::string("invalid --w: ") + e.what());
        }
        TraceDerivation d =
            a.variant == "chain5" ? chain5_trace_derivation() : weitzenbock_trace_derivation();
        if (!apply(d.cbar, w).is_zero())
            throw UsageError("--w must be a constant of the selected derivation");
        ExpTraceResult r = exp_w_delta(w, d);
        AlgebraContext tc = AlgebraContext::trace2x2();
        std::string xs = tc.render(ctxelem_from_trace(r.x_image));
        std::string ys = tc.render(ctxelem_from_trace(r.y_image));
        if (a.format == "json") {
            ordered_json j;
            j["variant"] = a.variant;
            j["w"] = render(w, cbar_names());
            j["x"] = xs;
            j["y"] = ys;
            j["matrix_algebra_member"] = r.r_membership;
            if (r.r_membership) j["w_quotient"] = render(r.w_quotient, cbar_names());
            std::printf("%s\n", j.dump(2).c_str());
        } else {
            std::printf("x -> %s\n", xs.c_str());
            std::printf("y -> %s\n", ys.c_str());
            std::printf("matrix algebra member: %s\n", r.r_membership ? "yes" : "no");
            if (r.r_membership)
                std::printf("w quotient by the commutator square: %s\n",
                            render(r.w_quotient, cbar_names()).c_str());
        }
        return 0;
    }

    LinearDerivation d = derivation_from_flags(a.jordan, a.matrix);
    std::vector<std::string> names = default_names(d.m());
    if (a.algebra == "comm") {
        CEndo e;
        if (a.w.empty()) {
            e = exp_linear_c(d);
        } else {
            CPoly w;
            try {
                w = parse_c(a.w, names);
            } catch (const std::exception& ex) {
                throw UsageError(std::string("invalid --w: ") + ex.what());
            }
            if (!apply(d, w).is_zero())
                throw UsageError("--w must be a constant of the derivation");
            e = exp_scaled(w, d);
        }
        if (a.format == "json") {
            ordered_json j;
            j["images"] = ordered_json::array();
            for (int i = 0; i < d.m(); ++i) {
                ordered_json item;
                item["var"] = names[static_cast<std::size_t>(i)];
                item["poly"] = to_json(e.images[static_cast<std::size_t>(i)], names);
                j["images"].push_back(item);
            }
            std::printf("%s\n", j.dump(2).c_str());
        } else {
            for (int i = 0; i < d.m(); ++i)
                std::printf("%s -> %s\n", names[static_cast<std::size_t>(i)].c_str(),
                            render(e.images[static_cast<std::size_t>(i)], names).c_str());
        }
        return 0;
    }
    if (a.algebra == "free") {
        if (!a.w.empty()) throw UsageError("--w requires --algebra comm or trace2x2");
        NCEndo e = exp_linear_nc(d);
        if (a.format == "json") {
            ordered_json j;
            j["images"] = ordered_json::array();
            for (int i = 0; i < d.m(); ++i) {
                ordered_json item;
                item["var"] = names[static_cast<std::size_t>(i)];
                item["poly"] = to_json(e.images[static_cast<std::size_t>(i)], names);
                j["images"].push_back(item);
            }
            std::printf("%s\n", j.dump(2).c_str());
        } else {
            for (int i = 0; i < d.m(); ++i)
                std::printf("%s -> %s\n", names[static_cast<std::size_t>(i)].c_str(),
                            render(e.images[static_cast<std::size_t>(i)], names).c_str());
        }
        return 0;
    }
    throw UsageError("--algebra must be comm, free, or trace2x2");
}

// --- log-automorphism -----------------------------------------------------

int cmd_log_automorphism(const std::string& algebra, const std::string& images_text,
                         const std::string& format) {
    std::vector<std::string> pieces = split(images_text, ';');
    int arity = static_cast<int>(pieces.size());
    if (arity == 0) throw UsageError("--images takes ';'-separated polynomials");
    std::vector<std::string> names = default_names(arity);
    if (algebra == "comm") {
        CEndo e;
        for (const auto& p : pieces) {
            try {
                e.images.push_back(parse_c(p, names));
            } catch (const std::exception& ex) {
                throw UsageError(std::string("invalid image: ") + ex.what());
            }
        }
        CDerivation d = log_endo(e);
        if (format == "json") {
            ordered_json j;
            j["images"] = ordered_json::array();
            for (int i = 0; i < arity; ++i) {
                ordered_json item;
                item["var"] = names[static_cast<std::size_t>(i)];
                item["poly"] = to_json(d.images[static_cast<std::size_t>(i)], names);
                j["images"].push_back(item);
            }
            std::printf("%s\n", j.dump(2).c_str());
        } else {
            for (int i = 0; i < arity; ++i)
                std::printf("delta(%s) = %s\n", names[static_cast<std::size_t>(i)].c_str(),
                            render(d.images[static_cast<std::size_t>(i)], names).c_str());
        }
        return 0;
    }
    if (algebra == "free") {
        NCEndo e;
        for (const auto& p : pieces) {
            try {
                e.images.push_back(parse_nc(p, names));
            } catch (const std::exception& ex) {
                throw UsageError(std::string("invalid image: ") + ex.what());
            }
        }
        NCDerivation d = log_endo(e);
        if (format == "json") {
            ordered_json j;
            j["images"] = ordered_json::array();
            for (int i = 0; i < arity; ++i) {
                ordered_json item;
                item["var"] = names[static_cast<std::size_t>(i)];
                item["poly"] = to_json(d.images[static_cast<std::size_t>(i)], names);
                j["images"].push_back(item);
            }
            std::printf("%s\n", j.dump(2).c_str());
        } else {
            for (int i = 0; i < arity; ++i)
                std::printf("delta(%s) = %s\n", names[static_cast<std::size_t>(i)].c_str(),
                            render(d.images[static_cast<std::size_t>(i)], names).c_str());
        }
        return 0;
    }
    throw UsageError("--algebra must be comm or free");
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const std::string& suite, int degree, const std::string& format) {
    std::vector<CheckResult> checks;
    try {
        checks = verify_suite(suite, degree);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    long failures = 0;
    for (const auto& c : checks)
        if (!c.pass) ++failures;
    if (format == "json") {
        ordered_json j;
        j["suite"] = suite;
        j["checks"] = ordered_json::array();
        for (const auto& c : checks) {
            ordered_json item;
            item["id"] = c.id;
            item["pass"] = c.pass;
            item["details"] = c.details;
            j["checks"].push_back(item);
        }
        j["failures"] = failures;
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        for (const auto& c : checks)
            std::printf("[%s] %s: %s\n", c.pass ? "PASS" : "FAIL", c.id.c_str(),
                        c.details.c_str());
        std::printf("%zu checks, %ld failures\n", checks.size(), failures);
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with triangular linear derivations and their constants"};
    app.require_subcommand(1);
    auto add_format = [](CLI::App* cmd, std::string& fmt) {
        cmd->add_option("--format", fmt, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->default_val("text");
    };

    ConstantsArgs ca;
    CLI::App* constants = app.add_subcommand("constants", "kernel basis of a derivation");
    constants->add_option("--algebra", ca.algebra,
                          "free, comm, metabelian2, grassmann-l2, wreath, trace2x2")
        ->required();
    constants->add_option("--rank", ca.rank, "rank for grassmann-l2 or wreath");
    constants->add_option("--jordan", ca.jordan, "Jordan block sizes, e.g. 3,2");
    constants->add_option("--matrix", ca.matrix, "row-major rational matrix, rows split by ';'");
    constants->add_option("--degree", ca.degree, "total degree layer");
    constants->add_option("--bidegree", ca.bidegree, "bidegree i,j (rank-2 algebras)");
    constants->add_option("--multidegree", ca.multidegree, "comma-separated multidegree");
    add_format(constants, ca.format);

    int sl2_degree = 0;
    std::string sl2_format;
    CLI::App* sl2 = app.add_subcommand("sl2-generators", "generators of the rank-2 invariants");
    sl2->add_option("--degree", sl2_degree, "maximum generator degree")->required();
    add_format(sl2, sl2_format);

    int hc_degree = 10;
    std::string hc_format;
    CLI::App* hc = app.add_subcommand("hilbert-constants",
                                      "Hilbert series of the rank-2 free constants");
    hc->add_option("--degree", hc_degree, "truncation order");
    add_format(hc, hc_format);

    std::string schur_lambda;
    int schur_degree = -1;
    std::string schur_format;
    CLI::App* schur = app.add_subcommand("schur", "two-variable Schur polynomial");
    schur->add_option("--lambda", schur_lambda, "partition l1,l2")->required();
    schur->add_option("--degree", schur_degree, "truncation order");
    add_format(schur, schur_format);

    std::string mult_algebra;
    int mult_rank = 2;
    int mult_degree = 12;
    std::string mult_format;
    CLI::App* mult = app.add_subcommand("multiplicity", "Schur multiplicities of a Hilbert series");
    mult->add_option("--algebra", mult_algebra, "free, metabelian2, or grassmann-l2")->required();
    mult->add_option("--rank", mult_rank, "rank (grassmann-l2 only)");
    mult->add_option("--degree", mult_degree, "truncation order");
    add_format(mult, mult_format);

    ExpArgs ea;
    CLI::App* expd = app.add_subcommand("exp-derivation", "exponential of a locally nilpotent derivation");
    expd->add_option("--algebra", ea.algebra, "comm, free, or trace2x2");
    expd->add_option("--jordan", ea.jordan, "Jordan block sizes");
    expd->add_option("--matrix", ea.matrix, "row-major rational matrix");
    expd->add_option("--w", ea.w, "scaling constant w (comm and trace2x2)");
    expd->add_option("--variant", ea.variant, "trace2x2 derivation: basic or chain5");
    add_format(expd, ea.format);

    std::string log_algebra = "comm";
    std::string log_images;
    std::string log_format;
    CLI::App* logc = app.add_subcommand("log-automorphism", "logarithm of a unipotent endomorphism");
    logc->add_option("--algebra", log_algebra, "comm or free");
    logc->add_option("--images", log_images, "';'-separated images of the variables")->required();
    add_format(logc, log_format);

    std::string verify_suite_name;
    int verify_degree = 0;
    std::string verify_format;
    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", verify_suite_name,
                    "nowicki, nagata, sl2, series, metabelian, grassmann, wreath, generic2x2, all")
        ->required();
    ver->add_option("--degree", verify_degree, "degree bound override for nowicki and sl2");
    ver->add_option("--max-degree", verify_degree, "alias of --degree");
    add_format(ver, verify_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (constants->parsed()) return cmd_constants(ca);
        if (sl2->parsed()) return cmd_sl2_generators(sl2_degree, sl2_format);
        if (hc->parsed()) return cmd_hilbert_constants(hc_degree, hc_format);
        if (schur->parsed()) return cmd_schur(schur_lambda, schur_degree, schur_format);
        if (mult->parsed()) return cmd_multiplicity(mult_algebra, mult_rank, mult_degree, mult_format);
        if (expd->parsed()) return cmd_exp_derivation(ea);
        if (logc->parsed()) return cmd_log_automorphism(log_algebra, log_images, log_format);
        if (ver->parsed()) return cmd_verify(verify_suite_name, verify_degree, verify_format);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const LayerCapExceeded& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const NotLocallyNilpotent& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const CheckFailure& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
