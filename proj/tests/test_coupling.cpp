#include <catch2/catch_amalgamated.hpp>

#include "widthlab/coupling.hpp"
#include "widthlab/rng.hpp"

using namespace widthlab;

namespace {

DegreeSequence random_min2_sequence(Rng& rng) {
    const std::size_t len = 2 + rng.below(29);
    DegreeSequence d;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < len; ++i) {
        d.push_back(2 + static_cast<std::uint32_t>(rng.below(5)));  // entries in 2..6
        total += d.back();
    }
    if (total % 2 == 1) ++d.back();
    return d;
}

std::uint64_t extraction_floor(const DegreeSequence& d) {
    std::uint64_t d3 = 0, big = 0;
    for (std::uint32_t x : d) {
        if (x == 3) ++d3;
        if (x >= 4) big += x;
    }
    return d3 > big ? d3 - big : 0;
}

}  // namespace

TEST_CASE("all-cubic input is a fixed point", "[coupling]") {
    const Configuration c = sample_configuration(DegreeSequence(6, 3), 99);
    const CubicExtraction ext = extract_cubic(c);
    CHECK(ext.m == 6);
    CHECK(ext.cubic == c);
    CHECK(ext.trace.s1_edges.empty());
    CHECK(ext.trace.s2_edges.empty());
    CHECK(ext.trace.s3_edges.empty());
    CHECK(validate_extraction(c, ext).ok);
}

TEST_CASE("a single degree-two cell annihilates", "[coupling]") {
    const Configuration c({2}, {1, 0});
    const CubicExtraction ext = extract_cubic(c);
    CHECK(ext.m == 0);
    CHECK(ext.cubic.cell_count() == 0);
    REQUIRE(ext.trace.s3_edges.size() == 1);
    CHECK(ext.trace.s3_merges[0][1] == -1);  // empty merge target
    CHECK(validate_extraction(c, ext).ok);
}

TEST_CASE("degree sequence (3,3,2) contracts once", "[coupling]") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Configuration c = sample_configuration({3, 3, 2}, seed);
        const CubicExtraction ext = extract_cubic(c);
        CHECK(ext.m == 2);
        for (std::size_t cell = 0; cell < ext.cubic.cell_count(); ++cell)
            CHECK(ext.cubic.cell_degree(cell) == 3);
        CHECK(validate_extraction(c, ext).ok);
    }
}

TEST_CASE("degree < 2 is rejected", "[coupling]") {
    const Configuration c = sample_configuration({1, 3}, 3);
    CHECK_THROWS_AS(extract_cubic(c), std::domain_error);
}

TEST_CASE("extraction is deterministic", "[coupling]") {
    Rng rng(7);
    for (int it = 0; it < 20; ++it) {
        DegreeSequence d = random_min2_sequence(rng);
        const Configuration c = sample_configuration(d, rng.u64());
        const CubicExtraction a = extract_cubic(c);
        const CubicExtraction b = extract_cubic(c);
        CHECK(a.m == b.m);
        CHECK(a.cubic == b.cubic);
        CHECK(to_text(a.trace) == to_text(b.trace));
    }
}

TEST_CASE("tampered results are rejected", "[coupling]") {
    const Configuration c = sample_configuration({3, 3, 2, 4, 2}, 11);
    CubicExtraction ext = extract_cubic(c);
    REQUIRE(validate_extraction(c, ext).ok);
    CubicExtraction tampered = ext;
    tampered.m -= 1;
    const ExtractionReport report = validate_extraction(c, tampered);
    CHECK(!report.ok);
    CHECK(!report.violations.empty());

    // Dropping a residual edge breaks the partition property.
    CubicExtraction missing = ext;
    if (!missing.trace.residual_edges.empty()) {
        missing.trace.residual_edges.pop_back();
        CHECK(!validate_extraction(c, missing).ok);
    }
}

TEST_CASE("random degree sequences extract and validate", "[coupling]") {
    Rng rng(1234);
    for (int it = 0; it < 1000; ++it) {
        const DegreeSequence d = random_min2_sequence(rng);
        const Configuration c = sample_configuration(d, rng.u64());
        const CubicExtraction ext = extract_cubic(c);
        CHECK(ext.m >= extraction_floor(d));
        const ExtractionReport report = validate_extraction(c, ext);
        if (!report.ok)
            for (const std::string& v : report.violations) UNSCOPED_INFO(v);
        CHECK(report.ok);
    }
}

TEST_CASE("matching partition property", "[coupling]") {
    Rng rng(555);
    for (int it = 0; it < 100; ++it) {
        const DegreeSequence d = random_min2_sequence(rng);
        const Configuration c = sample_configuration(d, rng.u64());
        const CubicExtraction ext = extract_cubic(c);
        const std::size_t total_pairs = c.half_edge_count() / 2;
        CHECK(ext.trace.s1_edges.size() + ext.trace.s2_edges.size() + ext.trace.s3_edges.size() +
                  ext.trace.residual_edges.size() ==
              total_pairs);
    }
}

TEST_CASE("trace audit format", "[coupling]") {
    const Configuration c({2}, {1, 0});
    const CubicExtraction ext = extract_cubic(c);
    CHECK(to_text(ext.trace) == "S3 0 1 merge 0 -\n");
}
