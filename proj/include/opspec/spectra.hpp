#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opspec/operator.hpp"

namespace opspec {

/// Every recognised spectrum name, in a fixed order.
const std::vector<std::string>& spectrum_names();
bool is_spectrum_name(const std::string& name);

/// Spectra of one operator expression. Pictures and spectra are cached per
/// engine when `memoize` is set; results never depend on it.
class SpectraEngine {
public:
    explicit SpectraEngine(ExprPtr e, bool memoize = true);

    const ExprPtr& expr() const { return expr_; }
    const SpectralPicture& picture();

    /// Throws Error("unknown-spectrum") for names outside spectrum_names().
    Region spectrum(const std::string& name);

    /// gDR-family spectrum with the Browder-type base (uw, lw, w, uf, lf, ub,
    /// lb, b) in place of the B-type one. Only defined for gDR names.
    Region gdr_browder_variant(const std::string& name);

private:
    ExprPtr expr_;
    bool memoize_;
    std::optional<SpectralPicture> picture_;
    std::map<std::string, Region> cache_;

    Region compute(const std::string& name);
};

/// Region where the cell predicate fails, i.e. the spectrum of a pointwise class.
/// Returns nullopt for names that are not pointwise.
std::optional<bool> in_pointwise_spectrum(const std::string& name, const Classification& c);

struct ChainCheck {
    std::string chain;  ///< e.g. "gKM <= gDMphi_p <= gDMW_p <= gDMJ"
    bool holds = false;
    std::string failed_link;  ///< first failing inclusion, empty when holds
};

/// Every inclusion chain over the named spectra.
std::vector<ChainCheck> inclusion_audit(SpectraEngine& engine);
std::vector<ChainCheck> inclusion_audit(const ExprPtr& e);

/// Whether each gDR spectrum agrees with its Browder-base variant.
struct VariantComparison {
    std::string name;
    bool equal = false;
};
std::vector<VariantComparison> compare_gdr_variants(SpectraEngine& engine);

}  // namespace opspec
