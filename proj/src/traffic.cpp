#include "awgrsim/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace awgrsim {

double TrafficParams::elephant_probability() const {
    const double weighted_mice = elephant_mice_ratio * mice_rate_mean_bps;
    const double denom = elephant_rate_mean_bps + weighted_mice;
    if (denom <= 0.0) return 0.0;
    return weighted_mice / denom;
}

void TrafficParams::validate(int total_racks) const {
    auto fail = [](const std::string& msg) { throw ConfigError("traffic: " + msg); };
    if (task_rate_per_s < 0) fail("task_rate_per_s must be >= 0");
    if (max_flows_per_task < 1) fail("max_flows_per_task must be >= 1");
    if (max_flows_per_task >= total_racks)
        fail("max_flows_per_task (" + std::to_string(max_flows_per_task) +
             ") must be < total racks (" + std::to_string(total_racks) +
             "): a task needs that many distinct non-source destinations");
    if (mice_rate_mean_bps < 0 || elephant_rate_mean_bps < 0) fail("flow rate means must be >= 0");
    if (elephant_mice_ratio <= 0) fail("elephant_mice_ratio must be > 0");
    if (flow_mean_duration_s <= 0) fail("flow_mean_duration_s must be > 0");
}

int sample_task_arrivals(const TrafficParams& params, double slot_duration_s, Rng& rng) {
    const double mean = params.task_rate_per_s * slot_duration_s;
    if (mean <= 0.0) return 0;
    return std::poisson_distribution<int>(mean)(rng);
}

std::vector<Flow> spawn_task(const TrafficParams& params, int total_racks,
                             uint64_t now_slot, double slot_duration_s, Rng& rng) {
    const RackId src = std::uniform_int_distribution<RackId>(1, total_racks)(rng);
    const int kappa = std::uniform_int_distribution<int>(1, params.max_flows_per_task)(rng);

    // Partial Fisher-Yates over the racks other than src.
    std::vector<RackId> pool;
    pool.reserve(static_cast<size_t>(total_racks) - 1);
    for (RackId r = 1; r <= total_racks; ++r)
        if (r != src) pool.push_back(r);
    const double p_elephant = params.elephant_probability();
    const double mean_duration_slots = params.flow_mean_duration_s / slot_duration_s;

    std::vector<Flow> flows;
    flows.reserve(static_cast<size_t>(kappa));
    for (int k = 0; k < kappa; ++k) {
        const size_t pick =
            std::uniform_int_distribution<size_t>(static_cast<size_t>(k), pool.size() - 1)(rng);
        std::swap(pool[static_cast<size_t>(k)], pool[pick]);
        const RackId dst = pool[static_cast<size_t>(k)];

        const bool elephant = std::bernoulli_distribution(p_elephant)(rng);
        const double mean = elephant ? params.elephant_rate_mean_bps : params.mice_rate_mean_bps;
        const double sigma = elephant ? params.elephant_sigma() : params.mice_sigma();
        double rate = mean;
        if (sigma > 0) rate = std::normal_distribution<double>(mean, sigma)(rng);
        rate = std::max(rate, 0.0); // negative Gaussian draws are set to 0

        const double life = std::exponential_distribution<double>(1.0 / mean_duration_slots)(rng);
        Flow f;
        f.src = src;
        f.dst = dst;
        f.cls = elephant ? FlowClass::elephant : FlowClass::mice;
        f.rate_bps = rate;
        f.end_slot = now_slot + static_cast<uint64_t>(std::ceil(life));
        flows.push_back(f);
    }
    return flows;
}

void FlowTable::add(Flow flow, uint64_t now_slot, Rng& rng) {
    ActiveFlow af;
    af.packets_per_slot = flow.rate_bps * slot_duration_s_ / packet_size_bits_;
    af.flow = flow;
    if (af.packets_per_slot > 0.0) {
        af.next_arrival = static_cast<double>(now_slot) +
                          std::exponential_distribution<double>(af.packets_per_slot)(rng);
    } else {
        af.next_arrival = std::numeric_limits<double>::infinity();
    }
    flows_.push_back(af);
}

int FlowTable::generate_packets(uint64_t slot, Rng& rng, uint64_t& next_packet_id,
                                std::vector<Packet>& out) {
    std::erase_if(flows_, [slot](const ActiveFlow& af) { return af.flow.end_slot < slot; });

    const double slot_end = static_cast<double>(slot) + 1.0;
    int produced = 0;
    for (ActiveFlow& af : flows_) {
        while (af.next_arrival < slot_end) {
            Packet p;
            p.id = next_packet_id++;
            p.src = af.flow.src;
            p.dst = af.flow.dst;
            p.arrival_slot = slot;
            p.holder = af.flow.src;
            p.hops_taken = 0;
            p.size_bits = packet_size_bits_;
            out.push_back(p);
            ++produced;
            af.next_arrival +=
                std::exponential_distribution<double>(af.packets_per_slot)(rng);
        }
    }
    return produced;
}

} // namespace awgrsim
