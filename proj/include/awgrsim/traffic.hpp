#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "awgrsim/common.hpp"

namespace awgrsim {

using Rng = std::mt19937_64;

enum class FlowClass : uint8_t { mice, elephant };

struct TrafficParams {
    double task_rate_per_s = 3.0;
    int max_flows_per_task = 1; // kappa upper bound, uniform in [1, max]
    double mice_rate_mean_bps = 0.48e6;
    double elephant_rate_mean_bps = 1.92e9;
    // sigma <= 0 means "use mean / 4"
    double mice_rate_sigma_bps = -1.0;
    double elephant_rate_sigma_bps = -1.0;
    double elephant_mice_ratio = 9.0; // target total elephant : mice rate
    double flow_mean_duration_s = 0.1;

    double mice_sigma() const { return mice_rate_sigma_bps > 0 ? mice_rate_sigma_bps : mice_rate_mean_bps / 4.0; }
    double elephant_sigma() const { return elephant_rate_sigma_bps > 0 ? elephant_rate_sigma_bps : elephant_rate_mean_bps / 4.0; }
    /// Per-flow elephant probability that makes the expected elephant:mice
    /// total rate equal elephant_mice_ratio.
    double elephant_probability() const;

    void validate(int total_racks) const;
};

struct Flow {
    RackId src = 0;
    RackId dst = 0;
    FlowClass cls = FlowClass::mice;
    double rate_bps = 0.0; // Gaussian draw, truncated at 0
    uint64_t end_slot = 0; // last slot the flow is active
};

struct Packet {
    uint64_t id = 0;
    RackId src = 0;
    RackId dst = 0;
    uint64_t arrival_slot = 0;
    RackId holder = 0; // current location
    uint8_t hops_taken = 0;
    int size_bits = 0;
};

/// Number of tasks arriving in one slot: Poisson with mean
/// task_rate * slot_duration.
int sample_task_arrivals(const TrafficParams& params, double slot_duration_s, Rng& rng);

/// One task: a uniform source rack and kappa flows to distinct uniform
/// destinations, each classified elephant/mice with rate and lifetime drawn
/// per the traffic model.
std::vector<Flow> spawn_task(const TrafficParams& params, int total_racks,
                             uint64_t now_slot, double slot_duration_s, Rng& rng);

/// Active flows plus their packet-arrival processes. Each flow emits
/// Poisson packet arrivals with per-slot mean rate * slot_duration /
/// packet_size, realized by exponential inter-arrival gaps.
class FlowTable {
public:
    FlowTable(double slot_duration_s, int packet_size_bits)
        : slot_duration_s_(slot_duration_s), packet_size_bits_(packet_size_bits) {}

    void add(Flow flow, uint64_t now_slot, Rng& rng);

    /// Drops expired flows, then appends this slot's arrivals to `out`
    /// (holder = src, arrival_slot = slot). Returns number appended.
    int generate_packets(uint64_t slot, Rng& rng, uint64_t& next_packet_id,
                         std::vector<Packet>& out);

    size_t active_count() const { return flows_.size(); }
    const Flow& flow(size_t idx) const { return flows_[idx].flow; }

private:
    struct ActiveFlow {
        Flow flow;
        double packets_per_slot = 0.0;
        double next_arrival = 0.0; // continuous time, slot units
    };

    double slot_duration_s_;
    int packet_size_bits_;
    std::vector<ActiveFlow> flows_;
};

} // namespace awgrsim
