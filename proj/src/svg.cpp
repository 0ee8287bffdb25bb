#include "opspec/svg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "opspec/error.hpp"

namespace opspec {

namespace {

using C = std::complex<double>;

constexpr int kSamples = 50;
constexpr double kPlot = 480.0;
constexpr double kLegend = 180.0;
const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

C to_c(const GaussianRational& z) { return {z.re().get_d(), z.im().get_d()}; }
double radius(const Circle& c) { return std::sqrt(c.r2.get_d()); }

std::string num(double v) {
    if (std::abs(v) < 5e-4) v = 0;  // no "-0.000"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '<') out += "&lt;";
        else if (ch == '>') out += "&gt;";
        else if (ch == '&') out += "&amp;";
        else if (ch == '"') out += "&quot;";
        else out += ch;
    }
    return out;
}

std::vector<C> samples(const Sequence& s) {
    std::vector<C> out;
    for (long n = s.start(); n < s.start() + kSamples; ++n) out.push_back(to_c(s.point(n)));
    return out;
}

// Numeric side of a point against a circle, with a relative tolerance.
Side side_of(const C& z, const Circle& c) {
    double d = std::norm(z - to_c(c.center)) - c.r2.get_d();
    double tol = 1e-9 * std::max(1.0, c.r2.get_d());
    if (d < -tol) return kIn;
    if (d > tol) return kOut;
    return kOn;
}

std::vector<C> circle_intersections(const Circle& a, const Circle& b) {
    C p = to_c(a.center), q = to_c(b.center);
    double d = std::abs(q - p), ra = radius(a), rb = radius(b);
    if (d == 0) return {};
    double x = (d * d + ra * ra - rb * rb) / (2 * d);
    double h2 = ra * ra - x * x;
    if (h2 < -1e-12) return {};
    double h = std::sqrt(std::max(0.0, h2));
    C u = (q - p) / d, base = p + x * u, perp(-u.imag(), u.real());
    if (h == 0) return {base};
    return {base + h * perp, base - h * perp};
}

// Finite vertex set of a cell pinned to two or more circles.
std::vector<C> vertex_points(const CellShape& cell) {
    std::vector<const Circle*> on;
    for (const auto& k : cell.constraints)
        if (k.mask == kOn) on.push_back(&k.circle);
    std::vector<C> out;
    if (on.size() < 2) return out;
    for (const C& z : circle_intersections(*on[0], *on[1])) {
        bool ok = true;
        for (const auto& k : cell.constraints) ok = ok && (k.mask & side_of(z, k.circle));
        if (ok) out.push_back(z);
    }
    return out;
}

class Canvas {
public:
    explicit Canvas(const std::vector<NamedRegion>& layers) {
        bool any = false;
        auto grow = [&](C z, double r = 0) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return;
            lo_ = any ? C(std::min(lo_.real(), z.real() - r), std::min(lo_.imag(), z.imag() - r)) : z - C(r, r);
            hi_ = any ? C(std::max(hi_.real(), z.real() + r), std::max(hi_.imag(), z.imag() + r)) : z + C(r, r);
            any = true;
        };
        for (const auto& [name, region] : layers)
            for (const auto& piece : region.pieces()) {
                if (piece.is_points())
                    for (const auto& z : piece.points()) grow(to_c(z));
                if (piece.is_sequence()) {
                    for (const C& z : samples(piece.sequence())) grow(z);
                    grow(to_c(piece.sequence().limit()));
                }
                if (piece.is_cell())
                    for (const auto& k : piece.cell().constraints) grow(to_c(k.circle.center), radius(k.circle));
            }
        if (!any) lo_ = C(-1, -1), hi_ = C(1, 1);
        double span = std::max({hi_.real() - lo_.real(), hi_.imag() - lo_.imag(), 1e-6});
        C mid = (lo_ + hi_) / 2.0;
        double half = span * 0.6 + 0.25;
        lo_ = mid - C(half, half);
        hi_ = mid + C(half, half);
        scale_ = kPlot / (2 * half);
    }

    double x(const C& z) const { return (z.real() - lo_.real()) * scale_; }
    double y(const C& z) const { return (hi_.imag() - z.imag()) * scale_; }
    double len(double r) const { return r * scale_; }
    C lo() const { return lo_; }
    C hi() const { return hi_; }

private:
    C lo_, hi_;
    double scale_ = 1;
};

class Writer {
public:
    Writer(const Canvas& canvas, std::ostringstream& defs, std::ostringstream& body)
        : cv_(canvas), defs_(defs), body_(body) {}

    std::string circle_attrs(const Circle& c) const {
        C z = to_c(c.center);
        return "cx=\"" + num(cv_.x(z)) + "\" cy=\"" + num(cv_.y(z)) + "\" r=\"" + num(cv_.len(radius(c))) + "\"";
    }

    void dot(const C& z, double r, const std::string& style) {
        body_ << "    <circle cx=\"" << num(cv_.x(z)) << "\" cy=\"" << num(cv_.y(z)) << "\" r=\"" << num(r) << "\" "
              << style << "/>\n";
    }

    void cross(const C& z, const std::string& color) {
        double cx = cv_.x(z), cy = cv_.y(z), s = 5;
        body_ << "    <path d=\"M" << num(cx - s) << " " << num(cy - s) << " L" << num(cx + s) << " " << num(cy + s)
              << " M" << num(cx - s) << " " << num(cy + s) << " L" << num(cx + s) << " " << num(cy - s)
              << "\" stroke=\"" << color << "\" stroke-width=\"1.5\" fill=\"none\"/>\n";
    }

    // Opens nested groups that restrict drawing to the constraints other than `skip`.
    int open_clip(const CellShape& cell, std::size_t skip, const std::string& id) {
        int opened = 0;
        std::string mask;
        for (std::size_t i = 0; i < cell.constraints.size(); ++i) {
            const auto& k = cell.constraints[i];
            if (i == skip || k.mask == kAllSides) continue;
            if (k.mask & kIn && !(k.mask & kOut)) {
                std::string cid = id + "c" + std::to_string(i);
                defs_ << "    <clipPath id=\"" << cid << "\"><circle " << circle_attrs(k.circle) << "/></clipPath>\n";
                body_ << "    <g clip-path=\"url(#" << cid << ")\">\n";
                ++opened;
            } else if (k.mask & kOut && !(k.mask & kIn)) {
                mask += "<circle " + circle_attrs(k.circle) + " fill=\"black\"/>";
            }
        }
        if (!mask.empty()) {
            std::string mid = id + "m";
            defs_ << "    <mask id=\"" << mid << "\" maskUnits=\"userSpaceOnUse\"><rect x=\"0\" y=\"0\" width=\""
                  << num(kPlot) << "\" height=\"" << num(kPlot) << "\" fill=\"white\"/>" << mask << "</mask>\n";
            body_ << "    <g mask=\"url(#" << mid << ")\">\n";
            ++opened;
        }
        return opened;
    }

    void close(int opened) {
        for (int i = 0; i < opened; ++i) body_ << "    </g>\n";
    }

    void cell(const CellShape& cell, const std::string& color, const std::string& id) {
        if (cell.is_vertex_set()) {
            for (const C& z : vertex_points(cell)) dot(z, 3, "fill=\"" + color + "\"");
            return;
        }
        const auto& ks = cell.constraints;
        auto on_only = std::find_if(ks.begin(), ks.end(), [](const Constraint& k) { return k.mask == kOn; });
        if (on_only != ks.end()) {
            std::size_t j = static_cast<std::size_t>(on_only - ks.begin());
            int opened = open_clip(cell, j, id + "a");
            body_ << "    <circle " << circle_attrs(on_only->circle) << " fill=\"none\" stroke=\"" << color
                  << "\" stroke-width=\"2.5\"/>\n";
            close(opened);
            return;
        }
        int opened = open_clip(cell, ks.size(), id + "f");
        body_ << "    <rect x=\"0\" y=\"0\" width=\"" << num(kPlot) << "\" height=\"" << num(kPlot) << "\" fill=\""
              << color << "\" fill-opacity=\"0.3\"/>\n";
        close(opened);
        for (std::size_t j = 0; j < ks.size(); ++j) {
            if (ks[j].mask == kAllSides) continue;
            int o = open_clip(cell, j, id + "b" + std::to_string(j));
            body_ << "    <circle " << circle_attrs(ks[j].circle) << " fill=\"none\" stroke=\"" << color
                  << "\" stroke-width=\"1.5\"" << ((ks[j].mask & kOn) ? "" : " stroke-dasharray=\"4 3\"") << "/>\n";
            close(o);
        }
    }

private:
    const Canvas& cv_;
    std::ostringstream& defs_;
    std::ostringstream& body_;
};

}  // namespace

std::string render_svg(const std::vector<NamedRegion>& layers) {
    Canvas cv(layers);
    std::ostringstream defs, body;
    Writer w(cv, defs, body);

    // Axes through the origin when it is in view.
    C lo = cv.lo(), hi = cv.hi();
    if (lo.real() < 0 && hi.real() > 0)
        body << "  <line x1=\"" << num(cv.x(0)) << "\" y1=\"0\" x2=\"" << num(cv.x(0)) << "\" y2=\"" << num(kPlot)
             << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
    if (lo.imag() < 0 && hi.imag() > 0)
        body << "  <line x1=\"0\" y1=\"" << num(cv.y(0)) << "\" x2=\"" << num(kPlot) << "\" y2=\"" << num(cv.y(0))
             << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";

    std::ostringstream legend;
    for (std::size_t li = 0; li < layers.size(); ++li) {
        const auto& [name, region] = layers[li];
        std::string color = kPalette[li % (sizeof kPalette / sizeof *kPalette)];
        std::string id = "L" + std::to_string(li);
        body << "  <g id=\"layer-" << li << "\" class=\"spectrum\" data-name=\"" << escape(name) << "\">\n";
        const auto& pieces = region.pieces();
        for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
            const Piece& p = pieces[pi];
            std::string pid = id + "P" + std::to_string(pi);
            if (p.is_points())
                for (const auto& z : p.points()) w.dot(to_c(z), 3.5, "fill=\"" + color + "\"");
            if (p.is_sequence()) {
                for (const C& z : samples(p.sequence())) w.dot(z, 2, "fill=\"" + color + "\"");
                w.cross(to_c(p.sequence().limit()), color);
            }
            if (p.is_cell()) w.cell(p.cell(), color, pid);
            const std::string hollow = "fill=\"white\" stroke=\"" + color + "\" stroke-width=\"1\"";
            for (const auto& z : p.except_points) w.dot(to_c(z), 2.5, hollow);
            for (const auto& s : p.except_seqs)
                for (const C& z : samples(s)) w.dot(z, 1.5, hollow);
        }
        body << "  </g>\n";
        double ly = 24 + 22 * static_cast<double>(li);
        legend << "  <rect x=\"" << num(kPlot + 16) << "\" y=\"" << num(ly - 10) << "\" width=\"12\" height=\"12\" fill=\""
               << color << "\"/>\n  <text x=\"" << num(kPlot + 34) << "\" y=\"" << num(ly)
               << "\" font-family=\"monospace\" font-size=\"12\">" << escape(name) << (region.empty() ? " (empty)" : "")
               << "</text>\n";
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kPlot + kLegend) << "\" height=\"" << num(kPlot)
        << "\" viewBox=\"0 0 " << num(kPlot + kLegend) << " " << num(kPlot) << "\">\n";
    out << "  <defs>\n" << defs.str() << "  </defs>\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << num(kPlot) << "\" height=\"" << num(kPlot)
        << "\" fill=\"none\" stroke=\"#888888\"/>\n";
    out << body.str() << legend.str() << "</svg>\n";
    return out.str();
}

void emit_svg(const std::vector<NamedRegion>& layers, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("io-error", "cannot open " + path);
    f << render_svg(layers);
    if (!f) throw Error("io-error", "cannot write " + path);
}

}  // namespace opspec
