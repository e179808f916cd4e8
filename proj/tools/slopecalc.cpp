#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "slopecalc/errors.hpp"
#include "slopecalc/json_io.hpp"
#include "slopecalc/mumford.hpp"

using nlohmann::json;
using namespace slopecalc;

namespace {

enum ExitCode { kOk = 0, kUsage = 2, kSemantic = 3, kPrecision = 4 };

json load_json_arg(const std::string& arg) {
    // inline JSON when the argument looks like an object, else a file path
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw schema_error("cannot open input file: " + arg);
    return json::parse(in);
}

std::string render(const SlopeMultiset& m, const std::string& format) {
    if (format == "ascii") return render_ascii(m);
    if (format == "svg") return render_svg(m);
    return to_json(m).dump(2) + "\n";
}

std::vector<std::pair<long, HullValue>> parse_points(const std::string& text) {
    std::vector<std::pair<long, HullValue>> points;
    std::size_t pos = 0;
    while ((pos = text.find('(', pos)) != std::string::npos) {
        std::size_t close = text.find(')', pos);
        if (close == std::string::npos) throw schema_error("unbalanced parenthesis in points");
        std::string body = text.substr(pos + 1, close - pos - 1);
        std::size_t comma = body.find(',');
        if (comma == std::string::npos) throw schema_error("point must be (index,value)");
        long idx = std::stol(body.substr(0, comma));
        std::string val = body.substr(comma + 1);
        val.erase(0, val.find_first_not_of(" \t"));
        val.erase(val.find_last_not_of(" \t") + 1);
        if (val == "inf" || val == "infinity") {
            points.emplace_back(idx, std::nullopt);
        } else if (std::size_t slash = val.find('/'); slash != std::string::npos) {
            points.emplace_back(idx, rat(std::stol(val.substr(0, slash)),
                                         std::stol(val.substr(slash + 1))));
        } else {
            points.emplace_back(idx, rat(std::stol(val)));
        }
        pos = close + 1;
    }
    if (points.empty()) throw schema_error("no points given");
    return points;
}

int run(int argc, char** argv) {
    CLI::App app{"Slope calculus of filtered phi-modules over unramified p-adic fields"};
    app.require_subcommand(1);
    std::string format = "json";

    // classify
    auto* classify_cmd = app.add_subcommand(
        "classify", "Newton polygon candidates of an abelian variety of Mumford's type");
    long d = 0, r = 0, eps = 0;
    classify_cmd->add_option("--d", d, "degree of the totally real field")->required();
    classify_cmd->add_option("--r", r, "residue degree of the chosen prime")->required();
    classify_cmd->add_option("--eps", eps, "quaternion invariant (0 or 1)")->required();
    classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "ascii", "svg"}));

    // tensor
    auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two slope data");
    std::string file_a, file_b;
    tensor_cmd->add_option("a", file_a, "slope JSON (path or inline)")->required();
    tensor_cmd->add_option("b", file_b, "slope JSON (path or inline)")->required();

    // hull
    auto* hull_cmd = app.add_subcommand("hull", "lower convex hull of valuation points");
    std::string points_text;
    hull_cmd->add_option("--points", points_text, "e.g. \"(0,0),(1,inf),(2,1)\"")->required();
    hull_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "ascii", "svg"}));

    // charpoly-newton
    auto* cpn_cmd = app.add_subcommand(
        "charpoly-newton", "Newton slopes of a sigma-linear matrix via linearization");
    std::string matrix_file;
    long precision_override = 0;
    cpn_cmd->add_option("matrix", matrix_file, "matrix JSON (path or inline)")->required();
    cpn_cmd->add_option("--precision", precision_override, "override working precision N");

    // enumerate
    auto* enum_cmd = app.add_subcommand(
        "enumerate", "admissible Newton slope candidates for the 2r-dimensional factor");
    long enum_r = 0, max_den = 0;
    bool brute = false;
    enum_cmd->add_option("--r", enum_r, "residue degree")->required();
    enum_cmd->add_flag("--brute", brute, "also run the exhaustive oracle and diff");
    enum_cmd->add_option("--max-den", max_den, "oracle denominator bound (default 2r)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the classification check suite");
    long d_max = 4;
    verify_cmd->add_option("--d-max", d_max, "check all data with d <= d-max");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    if (*classify_cmd) {
        MumfordDatum datum{d, r, eps};
        Classification cls = classify(datum);
        if (format == "json") {
            json out = {{"datum", {{"d", d}, {"r", r}, {"eps", eps}}},
                        {"supersingular", to_json(cls.supersingular.slopes)},
                        {"mu_ordinary", to_json(cls.mu_ordinary.slopes)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "supersingular:\n" << render(cls.supersingular.slopes, format)
                      << "mu_ordinary:\n" << render(cls.mu_ordinary.slopes, format);
        }
        return kOk;
    }

    if (*tensor_cmd) {
        SlopeData a = slope_data_from_json(load_json_arg(file_a));
        SlopeData b = slope_data_from_json(load_json_arg(file_b));
        std::cout << to_json(tensor(a, b)).dump(2) << "\n";
        return kOk;
    }

    if (*hull_cmd) {
        SlopeMultiset hull = lower_hull(parse_points(points_text));
        std::cout << render(hull, format);
        return kOk;
    }

    if (*cpn_cmd) {
        PhiMatrix phi = phi_matrix_from_json(load_json_arg(matrix_file), precision_override);
        std::cout << to_json(newton_slopes(phi)).dump(2) << "\n";
        return kOk;
    }

    if (*enum_cmd) {
        auto closed = enumerate_v1_newton(enum_r);
        json closed_j = json::array();
        for (const auto& s : closed) closed_j.push_back(to_json(s));
        if (!brute) {
            std::cout << closed_j.dump(2) << "\n";
            return kOk;
        }
        if (max_den == 0) max_den = 2 * enum_r;
        SlopeMultiset hodge = hodge_from_filtration({{0, 2 * enum_r - 1}, {1, 1}});
        auto oracle = brute_enumerate(2 * enum_r, hodge, max_den);
        json oracle_j = json::array();
        for (const auto& s : oracle) oracle_j.push_back(to_json(s));
        auto contains = [](const std::vector<SlopeData>& list, const SlopeData& s) {
            for (const auto& x : list)
                if (x.slopes == s.slopes) return true;
            return false;
        };
        json only_closed = json::array(), only_brute = json::array();
        for (const auto& s : closed)
            if (!contains(oracle, s)) only_closed.push_back(to_json(s));
        for (const auto& s : oracle)
            if (!contains(closed, s)) only_brute.push_back(to_json(s));
        json out = {{"closed_form", closed_j},
                    {"brute", oracle_j},
                    {"diff", {{"only_closed_form", only_closed}, {"only_brute", only_brute}}}};
        std::cout << out.dump(2) << "\n";
        return kOk;
    }

    if (*verify_cmd) {
        if (d_max < 1) throw schema_error("--d-max must be >= 1");
        bool all_ok = true;
        long data_checked = 0;
        for (long dd = 1; dd <= d_max; ++dd)
            for (long rr = 1; rr <= dd; ++rr)
                for (long ee = 0; ee <= 1; ++ee) {
                    VerificationReport rep = verify_classification({dd, rr, ee});
                    ++data_checked;
                    for (const auto& c : rep.checks) {
                        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
                        all_ok = all_ok && c.pass;
                    }
                }
        // two-case theorem for each residue degree in range
        for (long rr = 1; rr <= d_max; ++rr) {
            auto got = enumerate_v1_newton(rr);
            bool ok = got.size() == 2 &&
                      got[0].slopes == SlopeMultiset::from_pairs({{rat(1, 2 * rr), 2 * rr}}) &&
                      got[1].slopes ==
                          SlopeMultiset::from_pairs({{rat(0), rr}, {rat(1, rr), rr}});
            std::cout << (ok ? "PASS " : "FAIL ") << "two-case theorem r=" << rr << "\n";
            all_ok = all_ok && ok;
        }
        // semilinear ground truth at a fixed example
        {
            ContextPtr ctx = UnramifiedContext::create(3, 2, 64);
            Matrix a(ctx, 2);
            a.at(0, 1) = UnramifiedElement::from_int(ctx, 3);
            a.at(1, 0) = UnramifiedElement::one(ctx);
            SlopeData got = newton_slopes(PhiMatrix(a));
            bool ok = got.slopes == SlopeMultiset::from_pairs({{rat(1, 2), 2}});
            std::cout << (ok ? "PASS " : "FAIL ") << "semilinear [[0,p],[1,0]] at p=3, r=2\n";
            all_ok = all_ok && ok;
        }
        std::cout << (all_ok ? "OK" : "FAILED") << ": " << data_checked
                  << " data checked\n";
        return all_ok ? kOk : 1;
    }

    return kUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const precision_error& e) {
        std::cerr << "precision error: " << e.what()
                  << " (suggested N = " << e.suggested_precision << ")\n";
        return kPrecision;
    } catch (const semantic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSemantic;
    } catch (const schema_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid JSON: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
