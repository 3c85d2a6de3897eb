#include "awgrsim/reconfig.hpp"

namespace awgrsim {

bool should_reconfigure(int64_t intra_waiting, int64_t inter_waiting, double beta) {
    return beta * static_cast<double>(intra_waiting) <= static_cast<double>(inter_waiting);
}

bool should_reconfigure(const OccupancySnapshot& snapshot, double beta) {
    return should_reconfigure(snapshot.intra_waiting, snapshot.inter_waiting, beta);
}

ClusterAssignment greedy_cluster(const MutualMatrix& mutual, const TopologyParams& topo) {
    const int total = topo.total_racks();
    if (mutual.size() != total)
        throw std::invalid_argument("greedy_cluster: matrix is " + std::to_string(mutual.size()) +
                                    "x" + std::to_string(mutual.size()) + ", topology has " +
                                    std::to_string(total) + " racks");
    const int cluster_size = topo.racks_per_cluster;

    std::vector<char> taken(static_cast<size_t>(total) + 1, 0);
    std::vector<int64_t> score(static_cast<size_t>(total) + 1, 0); // vs current cluster
    std::vector<ClusterSlot> slots(static_cast<size_t>(total) + 1);

    auto place = [&](RackId r, int cluster, int position) {
        taken[static_cast<size_t>(r)] = 1;
        slots[static_cast<size_t>(r)] = {cluster, position};
        for (RackId q = 1; q <= total; ++q)
            if (!taken[static_cast<size_t>(q)]) score[static_cast<size_t>(q)] += mutual.at(q, r);
    };

    for (int cluster = 1; cluster <= topo.cluster_count; ++cluster) {
        std::fill(score.begin(), score.end(), 0);
        if (cluster_size == 1) {
            for (RackId r = 1; r <= total; ++r)
                if (!taken[static_cast<size_t>(r)]) {
                    place(r, cluster, 1);
                    break;
                }
            continue;
        }
        // Seed: the heaviest remaining pair (ties: lowest ids).
        RackId best_a = 0, best_b = 0;
        int64_t best = -1;
        for (RackId a = 1; a <= total; ++a) {
            if (taken[static_cast<size_t>(a)]) continue;
            for (RackId b = a + 1; b <= total; ++b) {
                if (taken[static_cast<size_t>(b)]) continue;
                if (mutual.at(a, b) > best) {
                    best = mutual.at(a, b);
                    best_a = a;
                    best_b = b;
                }
            }
        }
        place(best_a, cluster, 1);
        place(best_b, cluster, 2);
        // Fill: rack with the largest summed mutual count vs chosen racks.
        for (int position = 3; position <= cluster_size; ++position) {
            RackId pick = 0;
            int64_t pick_score = -1;
            for (RackId r = 1; r <= total; ++r) {
                if (taken[static_cast<size_t>(r)]) continue;
                if (score[static_cast<size_t>(r)] > pick_score) {
                    pick_score = score[static_cast<size_t>(r)];
                    pick = r;
                }
            }
            place(pick, cluster, position);
        }
    }
    return ClusterAssignment::from_slots(std::move(slots), topo);
}

std::optional<ReconfigDecision> tick_controller(ControllerState& ctl, uint64_t slot,
                                                const ReconfigParams& params,
                                                const std::vector<RackState>& racks,
                                                const ClusterAssignment& current,
                                                const TopologyParams& topo) {
    if (ctl.suspended_until.has_value()) {
        if (slot < *ctl.suspended_until) return std::nullopt;
        ctl.suspended_until.reset();
    }
    ctl.counter += 1;
    if (ctl.counter < params.sampling_interval) return std::nullopt;
    ctl.counter = 0; // reset on every sample, triggered or not

    int64_t intra = 0, inter = 0;
    occupancy_totals(racks, intra, inter);
    if (!should_reconfigure(intra, inter, params.beta)) return std::nullopt;

    const OccupancySnapshot snap = take_snapshot(racks, current);
    ReconfigDecision decision{greedy_cluster(snap.mutual, topo), snap.intra_waiting,
                              snap.inter_waiting};
    ctl.suspended_until = slot + params.reconfig_time;
    return decision;
}

} // namespace awgrsim
