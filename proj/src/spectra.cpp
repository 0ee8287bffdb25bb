#include "opspec/spectra.hpp"

#include <algorithm>

#include "opspec/error.hpp"

namespace opspec {

namespace {

bool fin(const ExtNat& n) { return n.finite(); }

/// alpha - beta <= 0, with an infinite beta counting as -inf.
bool index_nonpositive(const ExtNat& a, const ExtNat& b) { return fin(a) && (b.is_inf() || a <= b); }
bool index_nonnegative(const ExtNat& a, const ExtNat& b) { return fin(b) && (a.is_inf() || b <= a); }
bool index_zero(const ExtNat& a, const ExtNat& b) { return fin(a) && fin(b) && a == b; }

struct Topological {
    const char* flag;  // which admits_* flag is required
    const char* base;  // spectrum whose accumulation points are excluded
};

const std::map<std::string, Topological>& topological() {
    static const std::map<std::string, Topological> t = {
        {"gDMW_p", {"gKM", "usbw"}}, {"gDMW_m", {"gKM", "lsbw"}}, {"gDMW", {"gKM", "bw"}},
        {"gDMphi_p", {"gKM", "usbf"}}, {"gDMphi_m", {"gKM", "lsbf"}}, {"gDMJ", {"gKM", "usbb"}},
        {"gDMQ", {"gKM", "lsbb"}}, {"gDM", {"gKM", "bb"}},
        {"gDRW_p", {"gKR", "usbw"}}, {"gDRW_m", {"gKR", "lsbw"}}, {"gDRW", {"gKR", "bw"}},
        {"gDRphi_p", {"gKR", "usbf"}}, {"gDRphi_m", {"gKR", "lsbf"}}, {"gDRJ", {"gKR", "usbb"}},
        {"gDRQ", {"gKR", "lsbb"}}, {"gDR", {"gKR", "bb"}},
        {"pBf", {"gK", "bf"}}, {"pBw", {"gK", "bw"}},
    };
    return t;
}

const std::map<std::string, std::string>& browder_base() {
    static const std::map<std::string, std::string> m = {
        {"gDRW_p", "uw"}, {"gDRW_m", "lw"}, {"gDRW", "w"}, {"gDRphi_p", "uf"}, {"gDRphi_m", "lf"},
        {"gDRJ", "ub"}, {"gDRQ", "lb"}, {"gDR", "b"}, {"gDRphi", ""},
    };
    return m;
}

}  // namespace

const std::vector<std::string>& spectrum_names() {
    static const std::vector<std::string> names = {
        "sigma", "ap", "su", "uf", "lf", "f", "uw", "lw", "w", "ub", "lb", "b",
        "usbf", "lsbf", "bf", "usbw", "lsbw", "bw", "usbb", "lsbb", "bb",
        "gK", "gKR", "gKM", "gD", "pBf", "pBw",
        "gDR", "gDRJ", "gDRQ", "gDRphi_p", "gDRphi_m", "gDRphi", "gDRW_p", "gDRW_m", "gDRW",
        "gDM", "gDMJ", "gDMQ", "gDMphi_p", "gDMphi_m", "gDMphi", "gDMW_p", "gDMW_m", "gDMW",
        "svep_fail", "svep_adj_fail"};
    return names;
}

bool is_spectrum_name(const std::string& name) {
    const auto& n = spectrum_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::optional<bool> in_pointwise_spectrum(const std::string& name, const Classification& c) {
    const bool uf = fin(c.alpha) && c.range_closed;
    const bool lf = fin(c.beta) && c.range_closed;
    const bool usbf = fin(c.alpha_ev) && c.powers_range_closed;
    const bool lsbf = fin(c.beta_ev) && c.powers_range_closed;
    bool ok;
    if (name == "sigma") ok = c.alpha == ExtNat(0) && c.beta == ExtNat(0) && c.range_closed;
    else if (name == "ap") ok = c.alpha == ExtNat(0) && c.range_closed;
    else if (name == "su") ok = c.beta == ExtNat(0) && c.range_closed;
    else if (name == "uf") ok = uf;
    else if (name == "lf") ok = lf;
    else if (name == "f") ok = uf && lf;
    else if (name == "uw") ok = uf && index_nonpositive(c.alpha, c.beta);
    else if (name == "lw") ok = lf && index_nonnegative(c.alpha, c.beta);
    else if (name == "w") ok = uf && lf && index_zero(c.alpha, c.beta);
    else if (name == "ub") ok = uf && fin(c.ascent);
    else if (name == "lb") ok = lf && fin(c.descent);
    else if (name == "b") ok = uf && lf && fin(c.ascent) && fin(c.descent);
    else if (name == "usbf") ok = usbf;
    else if (name == "lsbf") ok = lsbf;
    else if (name == "bf") ok = usbf && lsbf;
    else if (name == "usbw") ok = usbf && index_nonpositive(c.alpha_ev, c.beta_ev);
    else if (name == "lsbw") ok = lsbf && index_nonnegative(c.alpha_ev, c.beta_ev);
    else if (name == "bw") ok = usbf && lsbf && index_zero(c.alpha_ev, c.beta_ev);
    else if (name == "usbb") ok = fin(c.ascent) && c.powers_range_closed;
    else if (name == "lsbb") ok = fin(c.descent) && c.powers_range_closed;
    else if (name == "bb") ok = fin(c.ascent) && fin(c.descent);
    else if (name == "gK") ok = c.admits_gkd;
    else if (name == "gKR") ok = c.admits_gkrd;
    else if (name == "gKM") ok = c.admits_gkmd;
    else if (name == "svep_fail") ok = c.svep;
    else if (name == "svep_adj_fail") ok = c.svep_adj;
    else return std::nullopt;
    return !ok;
}

SpectraEngine::SpectraEngine(ExprPtr e, bool memoize) : expr_(std::move(e)), memoize_(memoize) {}

const SpectralPicture& SpectraEngine::picture() {
    if (!picture_ || !memoize_) picture_ = opspec::picture(*expr_);
    return *picture_;
}

Region SpectraEngine::spectrum(const std::string& name) {
    if (!is_spectrum_name(name)) throw Error("unknown-spectrum", name);
    if (!memoize_) return compute(name);
    auto it = cache_.find(name);
    if (it != cache_.end()) return it->second;
    Region r = compute(name);
    cache_.emplace(name, r);
    return r;
}

Region SpectraEngine::compute(const std::string& name) {
    if (name == "gD") return acc(spectrum("sigma"));
    if (name == "gDMphi") return unite(spectrum("gDMphi_p"), spectrum("gDMphi_m"));
    if (name == "gDRphi") return unite(spectrum("gDRphi_p"), spectrum("gDRphi_m"));
    if (auto t = topological().find(name); t != topological().end())
        return unite(spectrum(t->second.flag), acc(spectrum(t->second.base)));
    std::vector<Region> parts;
    for (const auto& cell : picture().cells)
        if (*in_pointwise_spectrum(name, cell.cls)) parts.push_back(cell.region);
    return unite(parts);
}

Region SpectraEngine::gdr_browder_variant(const std::string& name) {
    auto it = browder_base().find(name);
    if (it == browder_base().end()) throw Error("unknown-spectrum", name + " has no Browder-base variant");
    if (name == "gDRphi") return unite(gdr_browder_variant("gDRphi_p"), gdr_browder_variant("gDRphi_m"));
    return unite(spectrum("gKR"), acc(spectrum(it->second)));
}

std::vector<ChainCheck> inclusion_audit(SpectraEngine& engine) {
    std::vector<std::vector<std::string>> chains = {
        {"uf", "uw", "ub", "ap", "sigma"},
        {"lf", "lw", "lb", "su", "sigma"},
        {"f", "w", "b", "sigma"},
        {"usbf", "usbw", "usbb", "ap"},
        {"lsbf", "lsbw", "lsbb", "su"},
        {"bf", "bw", "bb", "sigma"},
        {"usbf", "uf"}, {"usbw", "uw"}, {"usbb", "ub"},
        {"lsbf", "lf"}, {"lsbw", "lw"}, {"lsbb", "lb"},
        {"bf", "f"}, {"bw", "w"}, {"bb", "b"},
        {"gKM", "gKR", "gK"},
        {"gDM", "gDR", "gD", "bb"},
        {"gDRphi", "pBf", "pBw", "gD"},
        {"gDRW", "pBw"},
        {"svep_fail", "ub"},
        {"svep_adj_fail", "lb"},
    };
    for (const char* star : {"R", "M"}) {
        std::string s = std::string("gD") + star;
        std::string k = std::string("gK") + star;
        chains.push_back({k, s + "phi_p", s + "W_p", s + "J"});
        chains.push_back({k, s + "phi_m", s + "W_m", s + "Q"});
        chains.push_back({k, s + "phi", s + "W", s});
    }
    for (const char* x : {"J", "Q", "phi_p", "phi_m", "phi", "W_p", "W_m", "W", ""})
        chains.push_back({std::string("gDM") + x, std::string("gDR") + x});

    std::vector<ChainCheck> out;
    for (auto& chain : chains) {
        ChainCheck c;
        for (std::size_t i = 0; i < chain.size(); ++i) c.chain += (i ? " <= " : "") + chain[i];
        c.holds = true;
        for (std::size_t i = 0; i + 1 < chain.size() && c.holds; ++i)
            if (!subset(engine.spectrum(chain[i]), engine.spectrum(chain[i + 1]))) {
                c.holds = false;
                c.failed_link = chain[i] + " <= " + chain[i + 1];
            }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<ChainCheck> inclusion_audit(const ExprPtr& e) {
    SpectraEngine engine(e);
    return inclusion_audit(engine);
}

std::vector<VariantComparison> compare_gdr_variants(SpectraEngine& engine) {
    std::vector<VariantComparison> out;
    for (const auto& [name, base] : browder_base())
        out.push_back({name, equal(engine.spectrum(name), engine.gdr_browder_variant(name))});
    return out;
}

}  // namespace opspec
