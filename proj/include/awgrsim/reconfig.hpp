#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "awgrsim/rack_state.hpp"
#include "awgrsim/topology.hpp"

namespace awgrsim {

struct ReconfigParams {
    double beta = 15.0;              // trigger multiplier
    uint32_t sampling_interval = 30; // slots between buffer samples
    uint32_t reconfig_time = 10;     // slots of full suspension per reconfiguration

    void validate() const {
        if (beta < 0) throw ConfigError("reconfiguration: beta must be >= 0");
        if (sampling_interval < 1)
            throw ConfigError("reconfiguration: sampling_interval must be >= 1");
    }
};

struct ControllerState {
    uint32_t counter = 0; // slots since the last sample
    std::optional<uint64_t> suspended_until; // first slot allowed to schedule again

    bool is_suspended(uint64_t slot) const {
        return suspended_until.has_value() && slot < *suspended_until;
    }
};

bool should_reconfigure(int64_t intra_waiting, int64_t inter_waiting, double beta);
bool should_reconfigure(const OccupancySnapshot& snapshot, double beta);

/// Greedy clustering over the mutual matrix: seed each cluster with the
/// heaviest unpicked pair, then repeatedly add the rack with the largest
/// summed mutual count against the racks already chosen, until the cluster
/// holds racks_per_cluster racks. Ties break toward lower rack ids;
/// positions follow selection order.
ClusterAssignment greedy_cluster(const MutualMatrix& mutual, const TopologyParams& topo);

struct ReconfigDecision {
    ClusterAssignment assignment;
    int64_t intra_waiting = 0; // occupancy that triggered the decision
    int64_t inter_waiting = 0;
};

/// Per-slot controller tick, called before scheduling. While suspended it
/// does nothing. Otherwise the counter advances; every sampling_interval
/// slots the buffers are sampled (counter resets on every sample) and, when
/// beta * intra <= inter, a new assignment is computed and the network is
/// suspended for reconfig_time slots starting at this slot.
std::optional<ReconfigDecision> tick_controller(ControllerState& ctl, uint64_t slot,
                                                const ReconfigParams& params,
                                                const std::vector<RackState>& racks,
                                                const ClusterAssignment& current,
                                                const TopologyParams& topo);

} // namespace awgrsim
