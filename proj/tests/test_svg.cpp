#include <gtest/gtest.h>

#include <regex>

#include "opspec/dsl.hpp"
#include "opspec/spectra.hpp"
#include "opspec/svg.hpp"

using namespace opspec;

namespace {

// Body of the layer group with the given index.
std::string layer(const std::string& svg, int index) {
    std::string open = "<g id=\"layer-" + std::to_string(index) + "\"";
    auto start = svg.find(open);
    if (start == std::string::npos) return "";
    auto end = svg.find("\n  </g>", start);
    return svg.substr(start, end - start);
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
    return n;
}

}  // namespace

TEST(Svg, TwoLayersByteIdentical) {
    std::vector<NamedRegion> layers = {{"w", Region::circle(0, 1)}, {"b", Region::closed_disc(0, 1)}};
    std::string a = render_svg(layers), b = render_svg(layers);
    EXPECT_EQ(a, b);
    EXPECT_FALSE(layer(a, 0).empty());
    EXPECT_FALSE(layer(a, 1).empty());
    EXPECT_TRUE(layer(a, 2).empty());
    EXPECT_EQ(count(layer(a, 0), "stroke-width=\"2.5\""), 1u);  // the circle is a stroke
    EXPECT_EQ(count(layer(a, 1), "fill-opacity"), 1u);         // the disc is filled
    EXPECT_EQ(count(layer(a, 1), "stroke-dasharray"), 0u);     // with a closed boundary
    EXPECT_NE(a.find(">w</text>"), std::string::npos);
    EXPECT_NE(a.find(">b</text>"), std::string::npos);
}

TEST(Svg, SingleMarkerAtOrigin) {
    std::string svg = render_svg({{"sigma", Region::points({0})}});
    std::string body = layer(svg, 0);
    EXPECT_EQ(count(body, "<circle"), 1u);
    // The view is centred on the only point.
    std::smatch m;
    ASSERT_TRUE(std::regex_search(body, m, std::regex("cx=\"([0-9.]+)\" cy=\"([0-9.]+)\"")));
    EXPECT_EQ(m[1].str(), "240.000");
    EXPECT_EQ(m[2].str(), "240.000");
}

TEST(Svg, OpenDiscIsDashed) {
    std::string svg = render_svg({{"svep_fail", Region::open_disc(0, 1)}});
    EXPECT_EQ(count(layer(svg, 0), "stroke-dasharray"), 1u);
}

TEST(Svg, HarmonicDrazinLayers) {
    SpectraEngine engine(parse_expr("diag(harmonic)"));
    std::string svg = render_svg({{"gD", engine.spectrum("gD")}, {"gDM", engine.spectrum("gDM")}});
    EXPECT_EQ(count(layer(svg, 0), "<circle"), 1u);
    EXPECT_EQ(count(layer(svg, 1), "<circle"), 0u);
    EXPECT_NE(svg.find("gDM (empty)"), std::string::npos);
}

TEST(Svg, SequencesSampledWithLimitGlyph) {
    SpectraEngine engine(parse_expr("diag(harmonic)"));
    std::string body = layer(render_svg({{"sigma", engine.spectrum("sigma")}}), 0);
    EXPECT_EQ(count(body, "<circle"), 51u);  // fifty terms and the limit point itself
    EXPECT_EQ(count(body, "<path"), 1u);
}

TEST(Svg, LibraryRendersDeterministically) {
    for (const auto& inst : instance_library()) {
        SpectraEngine engine(inst.expr);
        std::vector<NamedRegion> layers;
        for (const char* name : {"sigma", "w", "b", "svep_fail"}) layers.emplace_back(name, engine.spectrum(name));
        std::string svg = render_svg(layers);
        EXPECT_EQ(svg, render_svg(layers)) << inst.name;
        EXPECT_EQ(svg.find("nan"), std::string::npos) << inst.name;
        EXPECT_EQ(count(svg, "<g"), count(svg, "</g>")) << inst.name;
    }
}
