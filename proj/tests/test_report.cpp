#include <sstream>

#include <doctest.h>

#include "gpulca/json_io.hpp"
#include "gpulca/report.hpp"
#include "test_util.hpp"

using namespace gpulca;

namespace {

StageBreakdown shipped_breakdown() {
    const GpuProduct p = load_bom(std::string(GPULCA_DATA_DIR) + "/a100_bom.json");
    const FactorSet f = load_factors(std::string(GPULCA_DATA_DIR) + "/factors_a100.json");
    const UsageScenario s =
        load_scenario(std::string(GPULCA_DATA_DIR) + "/scenario_bloom.json");
    return gpu_lifecycle(p, s, f);
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (char c : text)
        if (c == '\n')
            ++n;
    return n;
}

} // namespace

TEST_CASE("identical inputs render byte-identical JSON") {
    const StageBreakdown a = shipped_breakdown();
    const StageBreakdown b = shipped_breakdown();
    CHECK(render_card_report(a, ReportFormat::Json) ==
          render_card_report(b, ReportFormat::Json));
}

TEST_CASE("JSON report keys follow the canonical category order") {
    const std::string report = render_card_report(shipped_breakdown(), ReportFormat::Json);
    std::size_t previous = 0;
    for (auto cat : all_categories()) {
        const std::size_t pos = report.find("\"" + std::string(category_id(cat)) + "\"");
        REQUIRE(pos != std::string::npos);
        CHECK(pos > previous);
        previous = pos;
    }
}

TEST_CASE("CSV card report has a header and 16 category rows") {
    const std::string csv = render_card_report(shipped_breakdown(), ReportFormat::Csv);
    CHECK(count_lines(csv) == 17);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "category,unit,cradle-to-gate,distribution,use,end-of-life,total");
    // '.' decimal separator regardless of locale
    CHECK(csv.find(',') != std::string::npos);
    CHECK(csv.find("127.6") != std::string::npos);
}

TEST_CASE("markdown report rounds to four significant figures") {
    const std::string md = render_card_report(shipped_breakdown(), ReportFormat::Markdown);
    CHECK(md.find("| climate-change | kg CO2 eq | 127.6 |") != std::string::npos);
    CHECK(md.find("946.1") != std::string::npos);
}

TEST_CASE("report format ids") {
    CHECK(report_format_from_id("json") == ReportFormat::Json);
    CHECK(report_format_from_id("csv") == ReportFormat::Csv);
    CHECK(report_format_from_id("md") == ReportFormat::Markdown);
    CHECK(!report_format_from_id("xml").has_value());
}

TEST_CASE("svg rendering produces a well-formed stacked chart") {
    const std::string svg =
        render_breakdown_svg(shipped_breakdown().stage_shares(), "stage shares");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("climate-change") != std::string::npos);
    CHECK(svg.find("cradle-to-gate") != std::string::npos);
}
