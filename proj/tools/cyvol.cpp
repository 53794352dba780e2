// Command-line front end: one subcommand per library capability, JSON in and
// out, exact rationals as "p/q" strings, 1-based indices at the boundary.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyvol/cyvol.hpp"

using nlohmann::json;
using namespace cyvol;

namespace {

json rat(const Rational& x) { return to_string(x); }

json rat_vector(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(rat(x));
    return arr;
}

json double_vector(const std::vector<double>& v) {
    json arr = json::array();
    for (double x : v) arr.push_back(x);
    return arr;
}

json quad(const QuadExt& x) {
    json obj;
    obj["rational"] = rat(x.rational_part());
    obj["radical"] = rat(x.radical_part());
    obj["radicand"] = to_string(x.radicand());
    obj["approx"] = x.to_double();
    return obj;
}

json one_based(const Word& w) {
    json arr = json::array();
    for (int letter : w) arr.push_back(letter + 1);
    return arr;
}

Word zero_based(const std::vector<int>& letters) {
    Word w;
    for (int letter : letters) {
        require(letter >= 1, "IndexOutOfRange", "word letters are 1-based");
        w.push_back(letter - 1);
    }
    return w;
}

AmbientSpace load_space(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "ParseError", "cannot open input file", {{"path", path}});
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        fail("ParseError", std::string("invalid JSON: ") + e.what(), {{"path", path}});
    }
    try {
        std::vector<int> factors = doc.at("factors").get<std::vector<int>>();
        std::vector<std::vector<int>> degrees;
        if (doc.contains("degrees"))
            degrees = doc.at("degrees").get<std::vector<std::vector<int>>>();
        const bool strict = doc.value("strict_cy", true);
        return AmbientSpace(std::move(factors), std::move(degrees), strict);
    } catch (const json::exception& e) {
        fail("ParseError", std::string("bad space document: ") + e.what(), {{"path", path}});
    }
}

json space_summary(const AmbientSpace& space) {
    json out;
    out["factors"] = space.factors();
    out["degrees"] = space.degrees();
    out["strict_cy"] = space.strict_cy();
    out["n"] = space.n();
    out["dim"] = space.dim();
    json jset = json::array();
    for (int j : j_set(space)) jset.push_back(j + 1);
    out["J"] = jset;
    if (space.n() < space.min_factor())
        out["notice"] =
            "fewer defining divisors than the smallest factor dimension: the minimal-factor "
            "projections are not birational involutions here, so reflection-based operations "
            "are formal";
    return out;
}

// Boundary-point description for vol-asymp:
//   {"case":"class","coords":[...]} | {"case":"face","j":J,"coeffs":[...]}
//   | {"case":"lambda","pair":[I,J],"a_lambda":R,"coeffs":[...]}
//   | {"case":"pushed","word":[...],"inner":{...}}
struct BoundaryPoint {
    bool is_quadratic = false;
    std::vector<Rational> rational_coords;
    std::vector<QuadExt> quadratic_coords;
};

std::vector<Rational> parse_rat_array(const json& arr) {
    std::vector<Rational> out;
    for (const auto& item : arr) {
        if (item.is_string()) out.push_back(parse_rational(item.get<std::string>()));
        else if (item.is_number_integer()) out.push_back(Rational(item.get<long long>()));
        else fail("ParseError", "coefficients must be integers or rational strings");
    }
    return out;
}

BoundaryPoint build_boundary(const AmbientSpace& space, const json& doc) {
    const std::string kind = doc.at("case").get<std::string>();
    BoundaryPoint p;
    if (kind == "class") {
        p.rational_coords = parse_rat_array(doc.at("coords"));
    } else if (kind == "face") {
        const int j = doc.at("j").get<int>() - 1;
        p.rational_coords = boundary_face(space, j, parse_rat_array(doc.at("coeffs")));
    } else if (kind == "lambda") {
        const auto pr = doc.at("pair").get<std::vector<int>>();
        require(pr.size() == 2, "ParseError", "pair must have two entries");
        Rational a_lambda(1);
        if (doc.contains("a_lambda")) {
            const auto& al = doc.at("a_lambda");
            a_lambda = al.is_string() ? parse_rational(al.get<std::string>())
                                      : Rational(al.get<long long>());
        }
        std::vector<Rational> coeffs(space.l() - 2, Rational(0));
        if (doc.contains("coeffs")) coeffs = parse_rat_array(doc.at("coeffs"));
        p.is_quadratic = true;
        p.quadratic_coords =
            boundary_lambda_exact(space, pr[0] - 1, pr[1] - 1, a_lambda, coeffs);
    } else if (kind == "pushed") {
        const Word w = zero_based(doc.at("word").get<std::vector<int>>());
        BoundaryPoint inner = build_boundary(space, doc.at("inner"));
        if (inner.is_quadratic) {
            p.is_quadratic = true;
            p.quadratic_coords = boundary_pushed(space, w, std::move(inner.quadratic_coords));
        } else {
            p.rational_coords = boundary_pushed(space, w, std::move(inner.rational_coords));
        }
    } else {
        fail("ParseError", "unknown boundary case", {{"case", kind}});
    }
    if (!p.is_quadratic)
        require(static_cast<int>(p.rational_coords.size()) == space.l(), "ShapeMismatch",
                "boundary point has wrong dimension");
    return p;
}

json report_json(const AsymptoticReport& report) {
    json out;
    out["slope"] = report.slope;
    out["residual"] = report.residual;
    json samples = json::array();
    for (const auto& [s, v] : report.samples) samples.push_back(json::array({s, v}));
    out["samples"] = samples;
    out["predicted_class"] = report.predicted_class;
    if (report.predicted_class != "unmatched") {
        out["predicted_k"] = report.predicted_k;
        out["predicted_exponent"] = report.predicted_exponent;
    }
    return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Calabi-Yau intersection volumes: reflection groups, cones, and series"};
    app.require_subcommand(1);

    std::string input_path, class_csv, ample_csv, boundary_json, divisors_arg;
    std::string a_arg = "-1", b_arg = "2", k_arg = "1";
    int index_arg = 1, steps = 20;
    std::vector<int> pair_arg{1, 2};
    std::vector<int> grid{8, 20};
    int max_iter = 10000;
    long long terms = 1000000, budget = 20000;
    bool exact = false, restricted = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input_path, "space document (JSON)")->required();
    };

    auto* c_check = app.add_subcommand("check", "validate a space and certify its signature");
    add_input(c_check);

    auto* c_inv = app.add_subcommand("involution", "generator matrix for one reflection");
    add_input(c_inv);
    c_inv->add_option("--index", index_arg, "reflection index (1-based)")->required();

    auto* c_reduce = app.add_subcommand("reduce", "reduce a class into the nef chamber");
    add_input(c_reduce);
    c_reduce->add_option("--class", class_csv, "divisor class, comma-separated rationals")
        ->required();
    c_reduce->add_option("--max-iter", max_iter, "reduction iteration cap");

    auto* c_vol = app.add_subcommand("vol", "volume of a divisor class");
    add_input(c_vol);
    c_vol->add_option("--class", class_csv, "divisor class, comma-separated rationals")
        ->required();
    c_vol->add_option("--max-iter", max_iter, "reduction iteration cap");

    auto* c_asymp = app.add_subcommand("vol-asymp", "boundary vanishing order of the volume");
    add_input(c_asymp);
    c_asymp->add_option("--boundary", boundary_json, "boundary point description (JSON)")
        ->required();
    c_asymp->add_option("--ample", ample_csv, "scaling direction (default all ones)");
    c_asymp->add_option("--grid", grid, "dyadic exponent range m_lo m_hi")->expected(2);
    c_asymp->add_option("--max-iter", max_iter, "reduction iteration cap");
    c_asymp->add_flag("--exact", exact, "reduce in the quadratic field where applicable");
    c_asymp->add_flag("--restricted", restricted, "estimate on the minimal-factor restriction");

    auto* c_eigen = app.add_subcommand("eigen", "expanding eigenpair of a composite reflection");
    add_input(c_eigen);
    c_eigen->add_option("--pair", pair_arg, "generator indices (1-based)")->expected(2);
    c_eigen->add_flag("--exact", exact, "report exact quadratic-field components");

    auto* c_limit = app.add_subcommand("limit-root", "normalized power iteration of a pair");
    add_input(c_limit);
    c_limit->add_option("--pair", pair_arg, "generator indices (1-based)")->expected(2);
    c_limit->add_option("--class", class_csv, "base class (default all ones)");
    c_limit->add_option("--steps", steps, "number of iterates");

    auto* c_rays = app.add_subcommand("rays", "extremal rays of the fundamental chamber");
    add_input(c_rays);

    auto* c_series = app.add_subcommand("series", "slice-volume series and its closed form");
    c_series->add_option("--a", a_arg, "slope parameter a (rational)");
    c_series->add_option("--b", b_arg, "slope parameter b (rational)");
    c_series->add_option("--k", k_arg, "plane level k (rational)");
    c_series->add_option("--terms", terms, "partial-sum length");

    auto* c_pe = app.add_subcommand("pe-vol", "projective-bundle volume of the tautological class");
    add_input(c_pe);
    c_pe->add_option("--divisors", divisors_arg,
                     "divisor classes A_0;A_1;...: semicolon-separated rational CSVs")
        ->required();
    c_pe->add_option("--budget", budget, "volume evaluation budget");
    c_pe->add_option("--max-iter", max_iter, "reduction iteration cap");
    c_pe->add_flag("--exact", exact, "exact polynomial path (requires nef divisors)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*c_check) {
            const AmbientSpace space = load_space(input_path);
            json out = space_summary(space);
            if (!j_set(space).empty()) {
                const GramMatrix b = gram_from_ambient(space);
                json gram = json::array();
                for (int r = 0; r < b.size(); ++r) {
                    json row = json::array();
                    for (int c = 0; c < b.size(); ++c) row.push_back(rat(b.entries()(r, c)));
                    gram.push_back(row);
                }
                out["gram"] = gram;
                const Signature sig = signature(b.entries());
                out["signature"] = json::array({sig.positive, sig.negative, sig.zero});
                out["lorentzian"] = is_lorentzian(b);
            }
            emit(out);
        } else if (*c_inv) {
            const AmbientSpace space = load_space(input_path);
            const auto m = involution_matrix(space, index_arg - 1);
            json rows = json::array();
            for (int r = 0; r < m.rows(); ++r) {
                json row = json::array();
                for (int c = 0; c < m.cols(); ++c) row.push_back(rat(m(r, c)));
                rows.push_back(row);
            }
            emit(json{{"index", index_arg}, {"matrix", rows}});
        } else if (*c_reduce) {
            const AmbientSpace space = load_space(input_path);
            const auto result = reduce_to_nef(space, parse_rational_csv(class_csv), max_iter);
            emit(json{{"iterations", result.iterations},
                      {"reduced", rat_vector(result.reduced)},
                      {"word", one_based(result.word)}});
        } else if (*c_vol) {
            const AmbientSpace space = load_space(input_path);
            const Rational value = vol(space, parse_rational_csv(class_csv), max_iter);
            emit(json{{"vol", rat(value)}});
        } else if (*c_asymp) {
            const AmbientSpace space = load_space(input_path);
            json bdoc;
            try {
                bdoc = json::parse(boundary_json);
            } catch (const json::exception& e) {
                fail("ParseError", std::string("invalid boundary JSON: ") + e.what());
            }
            const BoundaryPoint p = build_boundary(space, bdoc);
            std::vector<Rational> ample(space.l(), Rational(1));
            if (!ample_csv.empty()) ample = parse_rational_csv(ample_csv);
            AsymptoticReport report;
            if (p.is_quadratic && exact) {
                std::vector<QuadExt> amp;
                for (const auto& x : ample) amp.emplace_back(x);
                report = restricted
                             ? vol_asymptotic_via_restriction(space, p.quadratic_coords, amp,
                                                              grid[0], grid[1], max_iter)
                             : vol_asymptotic_exponent(space, p.quadratic_coords, amp, grid[0],
                                                       grid[1], max_iter);
            } else if (p.is_quadratic) {
                std::vector<double> pd, amp;
                for (const auto& x : p.quadratic_coords) pd.push_back(x.to_double());
                for (const auto& x : ample) amp.push_back(to_double(x));
                report = restricted
                             ? vol_asymptotic_via_restriction(space, pd, amp, grid[0], grid[1],
                                                              max_iter)
                             : vol_asymptotic_exponent(space, pd, amp, grid[0], grid[1],
                                                       max_iter);
            } else {
                report = restricted
                             ? vol_asymptotic_via_restriction(space, p.rational_coords, ample,
                                                              grid[0], grid[1], max_iter)
                             : vol_asymptotic_exponent(space, p.rational_coords, ample, grid[0],
                                                       grid[1], max_iter);
            }
            emit(report_json(report));
        } else if (*c_eigen) {
            const AmbientSpace space = load_space(input_path);
            const int i = pair_arg[0] - 1, j = pair_arg[1] - 1;
            json out;
            out["pair"] = json::array({pair_arg[0], pair_arg[1]});
            out["b"] = to_string(b_coefficient(space, i, j));
            if (exact) {
                const auto e = coxeter_pair_eigen_exact(space, i, j);
                out["lambda"] = quad(e.lambda);
                json vec = json::array();
                for (const auto& x : e.vec) vec.push_back(quad(x));
                out["vector"] = vec;
            } else {
                const auto e = coxeter_pair_eigen(space, i, j);
                out["lambda"] = e.lambda;
                out["vector"] = double_vector(e.vec);
            }
            emit(out);
        } else if (*c_limit) {
            const AmbientSpace space = load_space(input_path);
            const int i = pair_arg[0] - 1, j = pair_arg[1] - 1;
            std::vector<double> base(space.l(), 1.0);
            if (!class_csv.empty()) {
                base.clear();
                for (const auto& x : parse_rational_csv(class_csv)) base.push_back(to_double(x));
            }
            const auto iterates = limit_root_iterate(space, i, j, base, steps);
            const bool full_j = static_cast<int>(j_set(space).size()) == space.l();
            json its = json::array(), pairings = json::array();
            const GramMatrix b = gram_from_ambient(space);
            for (const auto& it : iterates) {
                its.push_back(double_vector(it));
                if (full_j) pairings.push_back(pairing(b, it, it));
            }
            json out{{"iterates", its}};
            if (full_j) out["self_pairings"] = pairings;
            emit(out);
        } else if (*c_rays) {
            const AmbientSpace space = load_space(input_path);
            const GramMatrix b = gram_from_ambient(space);
            json rays = json::array();
            for (const auto& ray : fundamental_extremal_rays(space, b))
                rays.push_back(rat_vector(ray));
            emit(json{{"rays", rays}});
        } else if (*c_series) {
            const Rational a = parse_rational(a_arg), b = parse_rational(b_arg),
                           k = parse_rational(k_arg);
            const SeriesResult partial = series_partial_sum(terms, a, b, k);
            const SeriesResult closed = v_closed_form(a, b, k);
            json out;
            out["a"] = rat(a);
            out["b"] = rat(b);
            out["k"] = rat(k);
            out["terms"] = partial.terms;
            out["partial_sum"] = partial.partial_sum;
            out["tail_bound"] = partial.tail_bound;
            out["closed_form"] = closed.closed_form;
            out["alpha"] = closed.alpha;
            out["beta"] = closed.beta;
            out["digamma_args"] = json::array({closed.digamma_args[0], closed.digamma_args[1],
                                               closed.digamma_args[2], closed.digamma_args[3]});
            out["difference"] = std::abs(partial.partial_sum - closed.closed_form);
            emit(out);
        } else if (*c_pe) {
            const AmbientSpace space = load_space(input_path);
            std::vector<std::vector<Rational>> divisors;
            std::stringstream ss(divisors_arg);
            std::string piece;
            while (std::getline(ss, piece, ';')) divisors.push_back(parse_rational_csv(piece));
            require(divisors.size() >= 2, "ParseError", "need at least two divisor classes");
            json out;
            if (exact) {
                out["path"] = "exact";
                out["value"] = rat(bundle_volume_exact(space, divisors));
            } else {
                const BundleVolume bv = bundle_volume(space, divisors, budget, max_iter);
                out["path"] = "adaptive";
                out["value"] = bv.value;
                out["error_estimate"] = bv.error_estimate;
                out["evaluations"] = bv.evaluations;
                out["levels"] = bv.levels;
            }
            emit(out);
        }
    } catch (const Error& e) {
        json err;
        err["code"] = e.code();
        err["message"] = e.what();
        err["context"] = e.context();
        emit(err);
        return 2;
    }
    return 0;
}
