#include "vqm/selftest.hpp"

#include "vqm/oracle.hpp"
#include "vqm/serializer.hpp"
#include "vqm/synthetic.hpp"

namespace vqm {

std::vector<std::string> compare_engine_to_oracle(const Frame& f, const EngineConfig& cfg) {
    Engine engine(grid_geometry(f.res), cfg);
    const MetricRecord rec = engine.process(serialize_frame(f));

    std::vector<std::string> bad;
    const BlockinessSums blk = oracle_blockiness(f);
    if (rec.inter_sum != blk.inter) bad.push_back("inter_sum");
    if (rec.intra_sum != blk.intra) bad.push_back("intra_sum");
    if (rec.exposure != oracle_exposure_hw(f)) bad.push_back("exposure");
    if (static_cast<int>(rec.blackout) != oracle_blackout(f, cfg.th_blout)) bad.push_back("blackout");
    if (rec.interlace_count != oracle_interlace(f).count) bad.push_back("interlace_count");
    return bad;
}

SelftestReport run_selftest(std::uint64_t seed, std::uint64_t trials) {
    SelftestReport report;
    report.trials = trials;

    double exposure_hw_total = 0.0;
    double exposure_means_total = 0.0;

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const std::uint64_t frame_seed = mix64(seed ^ mix64(trial + 1));
        Resolution res;
        res.width = 16 + 8 * static_cast<std::uint32_t>(mix64(frame_seed) % 15);
        res.height = 16 + 8 * static_cast<std::uint32_t>(mix64(frame_seed + 1) % 15);

        // Alternate pure noise with structured patterns so the sparse
        // paths (blackout, comb, boundary jumps) are exercised too.
        const Frame f = trial % 2 == 0 ? random_frame(res, frame_seed)
                                       : patterned_frame(res, frame_seed, trial / 2);

        std::vector<std::string> bad = compare_engine_to_oracle(f);
        if (!bad.empty()) {
            ++report.failures;
            if (report.failure_samples.size() < 8) {
                report.failure_samples.push_back({trial, frame_seed, res, std::move(bad)});
            }
        }

        exposure_hw_total += oracle_exposure_hw(f);
        if (grid_geometry(res).shifted_blocks >= 3) {
            exposure_means_total += oracle_exposure_means(f);
            ++report.means_exposure_frames;
        }
    }

    if (trials > 0) {
        report.mean_exposure_hw = exposure_hw_total / static_cast<double>(trials);
    }
    if (report.means_exposure_frames > 0) {
        report.mean_exposure_means =
            exposure_means_total / static_cast<double>(report.means_exposure_frames);
    }
    return report;
}

}  // namespace vqm
