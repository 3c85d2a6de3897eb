#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "awgrsim/common.hpp"

namespace awgrsim {

/// One time-series sample. Latency fields are quantized to 0.001 us when
/// the record is created, so CSV export/parse round-trips exactly.
struct MetricsRecord {
    uint64_t slot = 0;
    double time_us = 0.0;           // slot * slot_duration
    double mean_latency_us = 0.0;   // over all deliveries so far
    double window_latency_us = 0.0; // over deliveries since the previous record
    int64_t intra_queued = 0;
    int64_t inter_queued = 0;
    uint64_t generated = 0;
    uint64_t delivered = 0;
    uint64_t dropped = 0;
    bool suspended = false;
    uint64_t reconfig_count = 0;

    bool operator==(const MetricsRecord&) const = default;
};

struct ReconfigEvent {
    uint64_t slot = 0;
    int64_t intra_waiting = 0; // occupancy at the trigger
    int64_t inter_waiting = 0;
    uint32_t duration_slots = 0;

    bool operator==(const ReconfigEvent&) const = default;
};

struct SummaryReport {
    uint64_t seed = 0;
    uint64_t duration_slots = 0;
    double simulated_time_s = 0.0;
    uint64_t generated = 0;
    uint64_t delivered = 0;
    uint64_t dropped = 0;
    uint64_t resident = 0; // still queued at the end
    uint64_t reconfigurations = 0;
    uint64_t suspended_slots = 0;
    double throughput = 0.0; // delivered / generated
    double drop_rate = 0.0;  // dropped / generated
    // Latency stats over deliveries after the warm-up prefix.
    uint64_t warmup_slots = 0;
    uint64_t measured_deliveries = 0;
    double mean_latency_us = 0.0;
    double p50_latency_us = 0.0;
    double p95_latency_us = 0.0;
    double p99_latency_us = 0.0;
};

void export_timeseries(const std::vector<MetricsRecord>& records,
                       const std::filesystem::path& path);
void export_events(const std::vector<ReconfigEvent>& events, const std::filesystem::path& path);

std::vector<MetricsRecord> parse_timeseries(const std::filesystem::path& path);
std::vector<ReconfigEvent> parse_events(const std::filesystem::path& path);

/// Mean and 95% confidence half-width (Student-t over trial means).
struct MeanCi {
    double mean = 0.0;
    double ci95 = 0.0;
    size_t n = 0;
};

MeanCi mean_ci95(const std::vector<double>& samples);

/// Per-metric aggregate over repeated trials of one configuration.
struct TrialAggregate {
    MeanCi mean_latency_us;
    MeanCi p50_latency_us;
    MeanCi p95_latency_us;
    MeanCi p99_latency_us;
    MeanCi throughput;
    MeanCi drop_rate;
    MeanCi reconfigurations;
};

TrialAggregate aggregate_trials(const std::vector<SummaryReport>& trials);

} // namespace awgrsim
