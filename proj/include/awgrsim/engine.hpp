#pragma once

#include <cstdint>
#include <vector>

#include "awgrsim/metrics.hpp"
#include "awgrsim/rack_state.hpp"
#include "awgrsim/reconfig.hpp"
#include "awgrsim/scheduler.hpp"
#include "awgrsim/topology.hpp"
#include "awgrsim/traffic.hpp"

namespace awgrsim {

struct SimConfig {
    TopologyParams topology;
    TrafficParams traffic;
    ReconfigParams reconfig;
    bool reconfiguration_enabled = true;
    int lb_threshold = 32;             // intra-waiting packets admitted to the intra path
    double link_rate_bps = 1.0e10;
    int packet_size_bits = 12000;      // 1500 bytes
    int64_t buffer_capacity_bits = 5'000'000;
    uint64_t duration_slots = 0;
    uint64_t seed = 1;
    uint64_t metrics_cadence = 1000;   // slots per time-series record; 0 disables
    double warmup_fraction = 0.10;     // summary latency stats skip this prefix

    double slot_duration_s() const { return packet_size_bits / link_rate_bps; }
    uint64_t warmup_slots() const {
        return static_cast<uint64_t>(static_cast<double>(duration_slots) * warmup_fraction);
    }
    void validate() const;
};

/// The slot-by-slot simulation loop. One instance is strictly sequential
/// and owns all of its state; run independent instances for parallelism.
class Engine {
public:
    explicit Engine(SimConfig config); // validates

    /// Executes one slot: traffic arrivals, controller tick, scheduling
    /// (unless suspended), grant execution, metrics.
    void step();

    /// Steps through config.duration_slots and returns the summary.
    SummaryReport run();

    /// Adds a scripted flow (trace-driven input); takes effect next step.
    void add_flow(const Flow& flow);
    /// Queues a single packet at src for dst, as if it arrived this slot.
    uint64_t inject_packet(RackId src, RackId dst);

    SummaryReport summary() const;

    uint64_t slot() const { return slot_; }
    const SimConfig& config() const { return cfg_; }
    const std::vector<RackState>& racks() const { return racks_; }
    const ClusterAssignment& assignment() const { return assignment_; }
    const ControllerState& controller() const { return controller_; }
    const std::vector<MetricsRecord>& metrics() const { return metrics_; }
    const std::vector<ReconfigEvent>& events() const { return events_; }
    const SlotPlan& last_plan() const { return plan_; }
    size_t active_flow_count() const { return flows_.active_count(); }

    uint64_t generated() const { return generated_; }
    uint64_t delivered() const { return delivered_; }
    uint64_t dropped() const { return dropped_; }
    uint64_t resident() const { return resident_; }
    uint64_t suspended_slots() const { return suspended_slots_; }

    /// Recounts queued packets across all racks (audit path).
    uint64_t recount_resident() const;
    /// Per-slot deep audit of the conservation identity; throws on breach.
    void set_audit(bool on) { audit_ = on; }

private:
    void enqueue_or_drop(Packet p);
    void deliver(const Packet& p);
    void record_metrics();
    void check_conservation() const;

    SimConfig cfg_;
    double slot_us_;
    uint64_t warmup_start_;

    Rng rng_;
    FlowTable flows_;
    std::vector<RackState> racks_;
    ClusterAssignment assignment_;
    ControllerState controller_;
    RoundRobinState rr_;
    Scheduler scheduler_;
    SlotPlan plan_;

    uint64_t slot_ = 0;
    uint64_t next_packet_id_ = 1;
    std::vector<Packet> arrivals_; // scratch

    uint64_t generated_ = 0;
    uint64_t delivered_ = 0;
    uint64_t dropped_ = 0;
    uint64_t resident_ = 0;
    uint64_t suspended_slots_ = 0;
    int64_t intra_total_ = 0; // queue totals maintained incrementally
    int64_t inter_total_ = 0;

    // Latency accounting: integer slot counts, histogram for percentiles.
    std::vector<uint64_t> latency_hist_; // post-warmup
    uint64_t measured_deliveries_ = 0;
    uint64_t latency_sum_measured_ = 0;
    uint64_t latency_sum_all_ = 0;
    uint64_t window_deliveries_ = 0;
    uint64_t window_latency_sum_ = 0;

    std::vector<MetricsRecord> metrics_;
    std::vector<ReconfigEvent> events_;
    bool audit_ = false;
};

} // namespace awgrsim
