// Command-line front end: PNG filtering, supremum calculator, golden-example
// verifier and bi-cone data dump.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lesmorph/colorspace.hpp"
#include "lesmorph/image_io.hpp"
#include "lesmorph/morphology.hpp"
#include "lesmorph/spectral.hpp"
#include "lesmorph/supremum.hpp"

namespace {

using namespace lesmorph;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitNumeric = 3;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

RgbColor parse_color(const std::string& token) {
    std::string s = token;
    for (char& c : s) {
        if (c == ',') c = ' ';
    }
    std::istringstream in(s);
    RgbColor c;
    if (!(in >> c.r >> c.g >> c.b)) {
        throw CLI::ValidationError("colour", "expected r,g,b triple, got '" + token + "'");
    }
    std::string rest;
    if (in >> rest) {
        throw CLI::ValidationError("colour", "trailing data in '" + token + "'");
    }
    return c;
}

std::vector<RgbColor> load_colors(const std::vector<std::string>& tokens,
                                  const std::string& file) {
    std::vector<RgbColor> out;
    for (const std::string& t : tokens) out.push_back(parse_color(t));
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw IoError("cannot open '" + file + "'");
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::string trimmed;
            for (char c : line) {
                if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) trimmed += c;
            }
            while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
                trimmed.pop_back();
            }
            if (!trimmed.empty()) out.push_back(parse_color(trimmed));
        }
    }
    return out;
}

StructuringElement parse_se_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw CLI::ValidationError("--se", "expected shape:radius, got '" + spec + "'");
    }
    const std::string shape = spec.substr(0, colon);
    int radius = 0;
    try {
        radius = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--se", "bad radius in '" + spec + "'");
    }
    if (radius < 1) throw CLI::ValidationError("--se", "radius must be >= 1");
    if (shape == "square") return se_make(SeShape::square, radius);
    if (shape == "disc") return se_make(SeShape::disc, radius);
    if (shape == "diamond") return se_make(SeShape::diamond, radius);
    if (shape == "cross") return se_make(SeShape::cross, radius);
    throw CLI::ValidationError("--se", "unknown shape '" + shape + "'");
}

// One offset per line: "dx dy [x y z]"; '#' starts a comment. The optional
// triple is a bi-cone displacement mapped linearly to a matrix height.
StructuringElement parse_se_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::vector<SeOffset> offsets;
    std::vector<Sym2> heights;
    bool any_height = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int dx = 0, dy = 0;
        if (!(ls >> dx)) continue;  // blank line
        if (!(ls >> dy)) {
            throw IoError(path + ":" + std::to_string(lineno) + ": expected 'dx dy [x y z]'");
        }
        offsets.push_back({dx, dy});
        double hx = 0.0, hy = 0.0, hz = 0.0;
        if (ls >> hx) {
            if (!(ls >> hy >> hz)) {
                throw IoError(path + ":" + std::to_string(lineno) + ": height needs x y z");
            }
            any_height = true;
        }
        heights.push_back(bicone_to_matrix({hx, hy, hz}));
    }
    if (offsets.empty()) {
        throw IoError(path + ": no offsets");
    }
    if (!any_height) return StructuringElement::flat(std::move(offsets));
    return StructuringElement::with_matrix_heights(std::move(offsets), std::move(heights));
}

void print_sup_report(const Sym2& s) {
    const SpectralDecomposition d = decompose(s);
    const RgbColor rgb = matrix_to_rgb(s);
    std::cout << "matrix: [" << fmt17(s.a11) << ", " << fmt17(s.a12) << "; " << fmt17(s.a12)
              << ", " << fmt17(s.a22) << "]\n";
    std::cout << "eigen:  lambda=" << fmt17(d.lambda) << " mu=" << fmt17(d.mu)
              << " phi_rad=" << fmt17(d.phi) << "\n";
    std::cout << "rgb:    " << fmt17(rgb.r) << " " << fmt17(rgb.g) << " " << fmt17(rgb.b) << "\n";
}

struct GoldenCase {
    std::string name;
    Sym2 actual;
    Sym2 expected;
    RgbColor expected_rgb;
};

int run_verify(bool as_json, const SupTolerances& tol) {
    const std::vector<RgbColor> trio{{0.0, 0.0, 1.0}, {0.6, 0.4, 0.2}, {1.0 / 3, 1.0 / 3, 5.0 / 6}};
    std::vector<Sym2> trio_m;
    for (const RgbColor& c : trio) trio_m.push_back(rgb_to_matrix(c));
    const std::vector<Sym2> duo_m{rgb_to_matrix({0.0, 0.0, 1.0}), rgb_to_matrix({0.0, 1.0, 0.0})};

    const double s2 = std::numbers::sqrt2;
    const double s3 = std::numbers::sqrt3;
    const std::vector<GoldenCase> cases{
        {"les of blue/brown/blue-magenta",
         les(trio_m, tol),
         {(3.0 + s3) / (5.0 * s2), -1.0 / (5.0 * s2), (3.0 - s3) / (5.0 * s2)},
         {0.6, 0.6, 1.0}},
        {"les of blue/green",
         les(duo_m, tol),
         Sym2::scaled_identity(1.0 / s2),
         {1.0, 1.0, 1.0}},
        {"rles of blue/brown/blue-magenta",
         rles(trio_m, tol),
         {(10.0 + s3) / (12.0 * s2), -1.0 / (12.0 * s2), (10.0 - s3) / (12.0 * s2)},
         {5.0 / 6, 5.0 / 6, 1.0}},
    };

    constexpr double kTol = 1e-12;
    bool all_ok = true;
    nlohmann::json results = nlohmann::json::array();
    for (const GoldenCase& c : cases) {
        const double mat_err = max_abs_diff(c.actual, c.expected);
        const RgbColor rgb = matrix_to_rgb(c.actual);
        const double rgb_err = std::max({std::abs(rgb.r - c.expected_rgb.r),
                                         std::abs(rgb.g - c.expected_rgb.g),
                                         std::abs(rgb.b - c.expected_rgb.b)});
        const bool ok = mat_err <= kTol && rgb_err <= kTol;
        all_ok = all_ok && ok;
        if (as_json) {
            results.push_back({{"name", c.name},
                               {"pass", ok},
                               {"matrix_error", mat_err},
                               {"rgb_error", rgb_err}});
        } else {
            std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name
                      << "  (matrix err " << fmt17(mat_err) << ", rgb err " << fmt17(rgb_err)
                      << ")\n";
        }
    }
    if (as_json) {
        std::cout << nlohmann::json{{"pass", all_ok}, {"results", results}}.dump(2) << "\n";
    } else {
        std::cout << (all_ok ? "verify: all cases reproduce within 1e-12\n"
                             : "verify: FAILURES above\n");
    }
    return all_ok ? kExitOk : kExitNumeric;
}

int run_dump(const std::vector<RgbColor>& colors) {
    std::cout << "x,y,z,radius,lambda,mu,phi_rad\n";
    for (const RgbColor& c : colors) {
        const BiConePoint p = hcl_to_bicone(rgb_to_hcl(c));
        const Sym2 a = bicone_to_matrix(p);
        const SpectralDecomposition d = decompose(a);
        const double radius = a.trace() / std::numbers::sqrt2;
        std::cout << fmt17(p.x) << "," << fmt17(p.y) << "," << fmt17(p.z) << "," << fmt17(radius)
                  << "," << fmt17(d.lambda) << "," << fmt17(d.mu) << "," << fmt17(d.phi) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix-valued colour morphology with log-exp suprema"};
    app.require_subcommand(1);

    // filter
    auto* filter = app.add_subcommand("filter", "apply a morphological operator to a PNG");
    std::string op = "dilate";
    std::string sup_kind = "les";
    std::string se_spec;
    std::string se_file;
    std::string range_mode = "fixed";
    std::string in_path, out_path;
    SupTolerances tol;
    filter->add_option("--op", op, "operator")->check(CLI::IsMember({"dilate", "erode", "open", "close"}));
    filter->add_option("--sup", sup_kind, "supremum kind")->check(CLI::IsMember({"les", "rles"}));
    auto* se_opt = filter->add_option("--se", se_spec, "structuring element shape:radius");
    auto* se_file_opt = filter->add_option("--se-file", se_file, "structuring element file");
    se_opt->excludes(se_file_opt);
    filter->add_option("--range", range_mode, "complement range for erosion")
        ->check(CLI::IsMember({"fixed", "image"}));
    filter->add_option("-i,--input", in_path, "input PNG")->required();
    filter->add_option("-o,--output", out_path, "output PNG")->required();
    filter->add_option("--tie-tol", tol.tie_tol, "eigenvalue tie tolerance");
    filter->add_option("--align-tol", tol.align_tol, "eigenvector alignment tolerance");

    // sup
    auto* sup = app.add_subcommand("sup", "supremum/infimum of a list of colours");
    std::string sup_op = "les";
    std::vector<std::string> color_tokens;
    std::string color_file;
    SupTolerances sup_tol;
    sup->add_option("--sup", sup_op, "which bound")->check(CLI::IsMember({"les", "rles", "lei", "rlei"}));
    sup->add_option("colours", color_tokens, "colours as r,g,b");
    sup->add_option("--file", color_file, "file with one colour per line");
    sup->add_option("--tie-tol", sup_tol.tie_tol, "eigenvalue tie tolerance");
    sup->add_option("--align-tol", sup_tol.align_tol, "eigenvector alignment tolerance");

    // verify
    auto* verify = app.add_subcommand("verify", "check the built-in golden examples");
    bool as_json = false;
    SupTolerances verify_tol;
    verify->add_flag("--json", as_json, "machine-readable output");
    verify->add_option("--tie-tol", verify_tol.tie_tol, "eigenvalue tie tolerance");
    verify->add_option("--align-tol", verify_tol.align_tol, "eigenvector alignment tolerance");

    // dump
    auto* dump = app.add_subcommand("dump", "bi-cone coordinates and eigen data as CSV");
    std::vector<std::string> dump_tokens;
    dump->add_option("colours", dump_tokens, "colours as r,g,b")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (filter->parsed()) {
            if (se_spec.empty() && se_file.empty()) {
                std::cerr << "filter: one of --se or --se-file is required\n";
                return kExitUsage;
            }
            const StructuringElement se =
                se_file.empty() ? parse_se_spec(se_spec) : parse_se_file(se_file);
            const RangeMode range =
                range_mode == "image" ? RangeMode::image_minmax : RangeMode::fixed_unit;
            Png png = read_png(in_path);
            const bool relaxed = sup_kind == "rles";
            if (op == "dilate") {
                png.image = relaxed ? rles_dilate(png.image, se, tol) : les_dilate(png.image, se, tol);
            } else if (op == "erode") {
                png.image = relaxed ? rles_erode(png.image, se, tol, range)
                                    : les_erode(png.image, se, tol, range);
            } else if (op == "open") {
                png.image = relaxed ? rles_open(png.image, se, tol, range)
                                    : les_open(png.image, se, tol, range);
            } else {
                png.image = relaxed ? rles_close(png.image, se, tol, range)
                                    : les_close(png.image, se, tol, range);
            }
            write_png(out_path, png);
            return kExitOk;
        }
        if (sup->parsed()) {
            const std::vector<RgbColor> colors = load_colors(color_tokens, color_file);
            if (colors.empty()) {
                std::cerr << "sup: no colours given\n";
                return kExitUsage;
            }
            std::vector<Sym2> mats;
            for (const RgbColor& c : colors) mats.push_back(rgb_to_matrix(c));
            Sym2 s;
            if (sup_op == "les") s = les(mats, sup_tol);
            else if (sup_op == "rles") s = rles(mats, sup_tol);
            else if (sup_op == "lei") s = lei(mats, sup_tol);
            else s = rlei(mats, sup_tol);
            print_sup_report(s);
            return kExitOk;
        }
        if (verify->parsed()) {
            return run_verify(as_json, verify_tol);
        }
        if (dump->parsed()) {
            std::vector<RgbColor> colors;
            for (const std::string& t : dump_tokens) colors.push_back(parse_color(t));
            return run_dump(colors);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
