#include "awgrsim/rack_state.hpp"

namespace awgrsim {

OccupancySnapshot take_snapshot(const std::vector<RackState>& racks,
                                const ClusterAssignment& assignment) {
    OccupancySnapshot snap;
    snap.mutual = MutualMatrix(assignment.total_racks());
    for (const RackState& rack : racks) {
        const int own_cluster = assignment.cluster_of(rack.id());
        for (RackId dst : rack.busy_destinations()) {
            const auto n = static_cast<int64_t>(rack.queue(dst).size());
            if (assignment.cluster_of(dst) == own_cluster)
                snap.intra_waiting += n;
            else
                snap.inter_waiting += n;
            snap.mutual.add(rack.id(), dst, n);
        }
    }
    return snap;
}

void occupancy_totals(const std::vector<RackState>& racks, int64_t& intra, int64_t& inter) {
    intra = 0;
    inter = 0;
    for (const RackState& rack : racks) {
        intra += rack.intra_waiting();
        inter += rack.inter_waiting();
    }
}

} // namespace awgrsim
