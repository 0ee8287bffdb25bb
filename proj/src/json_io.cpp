#include "opspec/json_io.hpp"

#include "opspec/error.hpp"

namespace opspec {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("bad-json", what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string text(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

long integer(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
    return v.get<long>();
}

template <class Fn>
auto guarded(Fn fn) {
    try {
        return fn();
    } catch (const Error& e) {
        // Malformed scalars and sequences are encoding errors; family violations keep their codes.
        if (e.code() != "bad-rational" && e.code() != "bad-sequence") throw;
        bad(e.what());
    } catch (const nlohmann::json::exception& e) {
        bad(e.what());
    }
}

Json ext_to_json(const ExtNat& n) { return n.is_inf() ? Json("inf") : Json(n.value()); }

ExtNat ext_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return ExtNat::inf();
    if (j.is_number_unsigned()) return ExtNat(j.get<std::uint64_t>());
    bad("expected a nonnegative integer or \"inf\"");
}

const char* side_names[] = {"in", "on", "out"};

Json mask_to_json(std::uint8_t mask) {
    Json out = Json::array();
    for (int b = 0; b < 3; ++b)
        if (mask & (1u << b)) out.push_back(side_names[b]);
    return out;
}

std::uint8_t mask_from_json(const Json& j) {
    if (!j.is_array()) bad("sides must be an array");
    std::uint8_t mask = 0;
    for (const auto& s : j) {
        int b = 0;
        while (b < 3 && !(s.is_string() && s.get<std::string>() == side_names[b])) ++b;
        if (b == 3) bad("unknown side " + s.dump());
        mask |= static_cast<std::uint8_t>(1u << b);
    }
    return mask;
}

Json sequence_to_json(const Sequence& s) {
    Json j;
    j["kind"] = "seq";
    j["family"] = s.family() == SeqFamily::Harmonic ? "harmonic" : "geometric";
    if (s.family() == SeqFamily::Geometric) j["ratio"] = rational_to_json(s.ratio());
    j["limit"] = gaussian_to_json(s.limit());
    j["scale"] = gaussian_to_json(s.scale());
    j["start"] = s.start();
    return j;
}

Sequence sequence_from_json(const Json& j) {
    std::string family = text(j, "family");
    GaussianRational limit = gaussian_from_json(field(j, "limit"));
    GaussianRational scale = gaussian_from_json(field(j, "scale"));
    long start = integer(j, "start");
    if (family == "harmonic") return Sequence::harmonic(limit, scale, start);
    if (family == "geometric") return Sequence::geometric(rational_from_json(field(j, "ratio")), limit, scale, start);
    bad("unknown sequence family " + family);
}

/// Circle, disc and annulus names for the common cell shapes.
Json cell_to_json(const CellShape& cell) {
    const auto& cs = cell.constraints;
    Json j;
    if (cs.size() == 1 && cs[0].mask == kOn) {
        j["kind"] = "circle";
        j["center"] = gaussian_to_json(cs[0].circle.center);
        j["r2"] = rational_to_json(cs[0].circle.r2);
    } else if (cs.size() == 1 && (cs[0].mask == (kIn | kOn) || cs[0].mask == kIn)) {
        j["kind"] = "disc";
        j["center"] = gaussian_to_json(cs[0].circle.center);
        j["r2"] = rational_to_json(cs[0].circle.r2);
        j["closed"] = cs[0].mask == (kIn | kOn);
    } else if (cs.size() == 2 && cs[0].circle.center == cs[1].circle.center &&
               (cs[0].mask & ~(kOut | kOn)) == 0 && (cs[0].mask & kOut) &&
               (cs[1].mask & ~(kIn | kOn)) == 0 && (cs[1].mask & kIn)) {
        j["kind"] = "annulus";
        j["center"] = gaussian_to_json(cs[0].circle.center);
        j["r_in2"] = rational_to_json(cs[0].circle.r2);
        j["r_out2"] = rational_to_json(cs[1].circle.r2);
        j["closed_inner"] = (cs[0].mask & kOn) != 0;
        j["closed_outer"] = (cs[1].mask & kOn) != 0;
    } else {
        j["kind"] = "cell";
        j["constraints"] = Json::array();
        for (const auto& c : cs)
            j["constraints"].push_back({{"center", gaussian_to_json(c.circle.center)},
                                        {"r2", rational_to_json(c.circle.r2)},
                                        {"sides", mask_to_json(c.mask)}});
    }
    return j;
}

bool flag(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_boolean()) bad(std::string("field '") + key + "' must be a boolean");
    return v.get<bool>();
}

CellShape cell_from_json(const Json& j, const std::string& kind) {
    CellShape cell;
    if (kind == "circle" || kind == "disc") {
        Circle c{gaussian_from_json(field(j, "center")), rational_from_json(field(j, "r2"))};
        std::uint8_t mask = kind == "circle" ? kOn : (flag(j, "closed") ? kIn | kOn : kIn);
        cell.constraints.push_back({c, mask});
    } else if (kind == "annulus") {
        GaussianRational center = gaussian_from_json(field(j, "center"));
        cell.constraints.push_back(
            {{center, rational_from_json(field(j, "r_in2"))}, static_cast<std::uint8_t>(flag(j, "closed_inner") ? kOut | kOn : kOut)});
        cell.constraints.push_back(
            {{center, rational_from_json(field(j, "r_out2"))}, static_cast<std::uint8_t>(flag(j, "closed_outer") ? kIn | kOn : kIn)});
    } else {
        for (const auto& c : field(j, "constraints"))
            cell.constraints.push_back({{gaussian_from_json(field(c, "center")), rational_from_json(field(c, "r2"))},
                                        mask_from_json(field(c, "sides"))});
    }
    return cell;
}

Json points_to_json(const PointSet& pts) {
    Json out = Json::array();
    for (const auto& p : pts) out.push_back(gaussian_to_json(p));
    return out;
}

PointSet points_from_json(const Json& j) {
    if (!j.is_array()) bad("points must be an array");
    PointSet out;
    for (const auto& p : j) out.push_back(gaussian_from_json(p));
    return out;
}

Json piece_to_json(const Piece& p) {
    Json j;
    if (p.is_points()) {
        j["kind"] = "points";
        j["points"] = points_to_json(p.points());
    } else if (p.is_sequence()) {
        j = sequence_to_json(p.sequence());
    } else {
        j = cell_to_json(p.cell());
    }
    if (!p.except_points.empty()) j["except_points"] = points_to_json(p.except_points);
    if (!p.except_seqs.empty()) {
        j["except_seqs"] = Json::array();
        for (const auto& s : p.except_seqs) j["except_seqs"].push_back(sequence_to_json(s));
    }
    return j;
}

Piece piece_from_json(const Json& j) {
    std::string kind = text(j, "kind");
    Piece p{PointSet{}, {}, {}};
    if (kind == "points")
        p.shape = points_from_json(field(j, "points"));
    else if (kind == "seq")
        p.shape = sequence_from_json(j);
    else if (kind == "circle" || kind == "disc" || kind == "annulus" || kind == "cell")
        p.shape = cell_from_json(j, kind);
    else
        bad("unknown region kind " + kind);
    if (j.contains("except_points")) p.except_points = points_from_json(j.at("except_points"));
    if (j.contains("except_seqs"))
        for (const auto& s : j.at("except_seqs")) p.except_seqs.push_back(sequence_from_json(s));
    return p;
}

}  // namespace

Json rational_to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j) {
    return guarded([&] {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (!j.is_string()) bad("rational must be a string \"p/q\"");
        return parse_rational(j.get<std::string>());
    });
}

Json gaussian_to_json(const GaussianRational& z) {
    return {{"re", rational_to_json(z.re())}, {"im", rational_to_json(z.im())}};
}

GaussianRational gaussian_from_json(const Json& j) {
    return guarded([&] { return GaussianRational(rational_from_json(field(j, "re")), rational_from_json(field(j, "im"))); });
}

Json matrix_to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

ExactMatrix matrix_from_json(const Json& j) {
    return guarded([&] {
        long rows = integer(j, "rows"), cols = integer(j, "cols");
        const Json& entries = field(j, "entries");
        if (rows < 0 || cols < 0 || !entries.is_array() || entries.size() != static_cast<std::size_t>(rows))
            bad("entries do not match the declared shape");
        ExactMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Json& row = entries[i];
            if (!row.is_array() || row.size() != m.cols()) bad("row " + std::to_string(i) + " has the wrong length");
            for (std::size_t k = 0; k < m.cols(); ++k) {
                const Json& v = row[k];
                if (v.is_number_integer())
                    m(i, k) = GaussianRational(Rational(v.get<long>()));
                else if (v.is_string())
                    m(i, k) = GaussianRational::parse(v.get<std::string>());
                else
                    bad("matrix entries must be strings or integers");
            }
        }
        return m;
    });
}

Json region_to_json(const Region& r) {
    Json out = Json::array();
    for (const auto& p : r.pieces()) out.push_back(piece_to_json(p));
    return out;
}

Region region_from_json(const Json& j) {
    return guarded([&] {
        if (!j.is_array()) bad("region must be an array of primitives");
        std::vector<Piece> pieces;
        for (const auto& p : j) pieces.push_back(piece_from_json(p));
        return Region(std::move(pieces));
    });
}

Json classification_to_json(const Classification& c) {
    return {{"alpha", ext_to_json(c.alpha)},
            {"beta", ext_to_json(c.beta)},
            {"range_closed", c.range_closed},
            {"ascent", ext_to_json(c.ascent)},
            {"descent", ext_to_json(c.descent)},
            {"alpha_ev", ext_to_json(c.alpha_ev)},
            {"beta_ev", ext_to_json(c.beta_ev)},
            {"powers_range_closed", c.powers_range_closed},
            {"svep", c.svep},
            {"svep_adj", c.svep_adj},
            {"admits_gkd", c.admits_gkd},
            {"admits_gkrd", c.admits_gkrd},
            {"admits_gkmd", c.admits_gkmd}};
}

Classification classification_from_json(const Json& j) {
    return guarded([&] {
        Classification c;
        c.alpha = ext_from_json(field(j, "alpha"));
        c.beta = ext_from_json(field(j, "beta"));
        c.range_closed = flag(j, "range_closed");
        c.ascent = ext_from_json(field(j, "ascent"));
        c.descent = ext_from_json(field(j, "descent"));
        c.alpha_ev = ext_from_json(field(j, "alpha_ev"));
        c.beta_ev = ext_from_json(field(j, "beta_ev"));
        c.powers_range_closed = flag(j, "powers_range_closed");
        c.svep = flag(j, "svep");
        c.svep_adj = flag(j, "svep_adj");
        c.admits_gkd = flag(j, "admits_gkd");
        c.admits_gkrd = flag(j, "admits_gkrd");
        c.admits_gkmd = flag(j, "admits_gkmd");
        return c;
    });
}

Json picture_to_json(const SpectralPicture& p) {
    Json cells = Json::array();
    for (const auto& c : p.cells)
        cells.push_back({{"region", region_to_json(c.region)}, {"class", classification_to_json(c.cls)}});
    return {{"cells", cells}, {"default", classification_to_json(p.default_cell)}};
}

SpectralPicture picture_from_json(const Json& j) {
    return guarded([&] {
        SpectralPicture p;
        for (const auto& c : field(j, "cells"))
            p.cells.push_back({region_from_json(field(c, "region")), classification_from_json(field(c, "class"))});
        if (j.contains("default")) p.default_cell = classification_from_json(j.at("default"));
        return p;
    });
}

Json expr_to_json(const Expr& e) {
    Json j;
    switch (e.kind) {
        case ExprKind::Matrix:
            j["op"] = "matrix";
            j["matrix"] = matrix_to_json(e.matrix);
            break;
        case ExprKind::Diag:
            j["op"] = "diag";
            if (e.diag_kind == DiagKind::Harmonic) {
                j["family"] = "harmonic";
            } else if (e.diag_kind == DiagKind::Geometric) {
                j["family"] = "geometric";
                j["q"] = rational_to_json(e.parameter);
            } else {
                j["family"] = "list";
                j["entries"] = Json::array();
                for (const auto& d : e.entries)
                    j["entries"].push_back({{"value", gaussian_to_json(d.value)}, {"mult", ext_to_json(d.multiplicity)}});
            }
            break;
        case ExprKind::Shift:
            j["op"] = "shift";
            if (e.weight_kind == WeightKind::Const) {
                j["weights"] = "const";
                j["w"] = rational_to_json(e.parameter);
            } else if (e.weight_kind == WeightKind::Geometric) {
                j["weights"] = "geometric";
                j["q"] = rational_to_json(e.parameter);
            } else {
                j["weights"] = "invfact";
            }
            break;
        case ExprKind::Jordan:
            j["op"] = "jordan";
            j["lambda"] = gaussian_to_json(e.scalar);
            j["size"] = e.size;
            break;
        case ExprKind::Adj:
            j["op"] = "adj";
            j["args"] = Json::array({expr_to_json(*e.left)});
            break;
        case ExprKind::Scale:
            j["op"] = "scale";
            j["c"] = gaussian_to_json(e.scalar);
            j["args"] = Json::array({expr_to_json(*e.left)});
            break;
        case ExprKind::Translate:
            j["op"] = "translate";
            j["d"] = gaussian_to_json(e.scalar);
            j["args"] = Json::array({expr_to_json(*e.left)});
            break;
        case ExprKind::DirectSum:
            j["op"] = "dsum";
            j["args"] = Json::array({expr_to_json(*e.left), expr_to_json(*e.right)});
            break;
    }
    return j;
}

namespace {

ExprPtr arg(const Json& j, std::size_t i, std::size_t count) {
    const Json& args = field(j, "args");
    if (!args.is_array() || args.size() != count) bad("expected " + std::to_string(count) + " args");
    return expr_from_json(args[i]);
}

}  // namespace

ExprPtr expr_from_json(const Json& j) {
    return guarded([&]() -> ExprPtr {
        std::string op = text(j, "op");
        if (op == "matrix") return make_matrix(matrix_from_json(field(j, "matrix")));
        if (op == "diag") {
            std::string family = text(j, "family");
            if (family == "harmonic") return make_diag_harmonic();
            if (family == "geometric") return make_diag_geometric(rational_from_json(field(j, "q")));
            if (family != "list") bad("unknown diag family " + family);
            std::vector<DiagEntry> entries;
            for (const auto& d : field(j, "entries"))
                entries.push_back({gaussian_from_json(field(d, "value")), ext_from_json(field(d, "mult"))});
            return make_diag_list(entries);
        }
        if (op == "shift") {
            std::string w = text(j, "weights");
            if (w == "const") return make_shift_const(rational_from_json(field(j, "w")));
            if (w == "geometric") return make_shift_geometric(rational_from_json(field(j, "q")));
            if (w == "invfact") return make_shift_invfact();
            bad("unknown weight family " + w);
        }
        if (op == "jordan") {
            long size = integer(j, "size");
            if (size < 0) bad("negative Jordan size");
            return make_jordan(gaussian_from_json(field(j, "lambda")), static_cast<std::size_t>(size));
        }
        if (op == "adj") return make_adj(arg(j, 0, 1));
        if (op == "scale") return make_scale(gaussian_from_json(field(j, "c")), arg(j, 0, 1));
        if (op == "translate") return make_translate(gaussian_from_json(field(j, "d")), arg(j, 0, 1));
        if (op == "dsum") return make_dsum(arg(j, 0, 2), arg(j, 1, 2));
        bad("unknown op " + op);
    });
}

Json drazin_to_json(const DrazinCertificate& c) {
    return {{"index", c.index},
            {"inverse", matrix_to_json(c.inverse)},
            {"axioms", {{"ab=ba", c.commutes}, {"bab=b", c.inner}, {"a^(r+1)b=a^r", c.power}}}};
}

Json identity_report_to_json(const IdentityReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json item = {{"name", c.name}, {"pass", c.pass}, {"asserted", c.asserted}};
        if (!c.pass && c.residual.rows() > 0) item["residual"] = matrix_to_json(c.residual);
        checks.push_back(item);
    }
    Json notes = Json::object();
    for (const auto& [k, v] : r.notes) notes[k] = v;
    return {{"construction", r.construction}, {"ok", r.ok()}, {"checks", checks}, {"notes", notes}};
}

}  // namespace opspec
