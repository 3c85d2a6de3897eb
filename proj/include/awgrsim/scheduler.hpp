#pragma once

#include <cstdint>
#include <vector>

#include "awgrsim/rack_state.hpp"
#include "awgrsim/topology.hpp"

namespace awgrsim {

enum class PathChoice : uint8_t { intra, inter_direct, inter_two_hop };

struct Grant {
    Packet packet; // already popped from its virtual queue
    PathChoice path = PathChoice::intra;
    Wavelength wavelength = 0;
    RackId next_holder = 0; // final dst, or the relay for a two-hop first leg
    int tx_index = 0;       // which of the rack's transmitters (1-based)
    int src_port = 0;       // AWGR ports: clusters for inter, positions for intra
    int dst_port = 0;
};

struct SlotPlan {
    uint64_t slot = 0;
    std::vector<Grant> grants;
    void clear(uint64_t s) {
        slot = s;
        grants.clear();
    }
};

/// Round-robin cursors: one wavelength cursor per (source rack, destination
/// port, path class), plus a per-rack scan cursor rotating the order in
/// which its virtual queues are visited.
class RoundRobinState {
public:
    explicit RoundRobinState(const TopologyParams& topo);

    int& inter_cursor(RackId src, int dst_cluster) {
        return inter_[static_cast<size_t>(src - 1) * static_cast<size_t>(clusters_) +
                      static_cast<size_t>(dst_cluster - 1)];
    }
    int& intra_cursor(RackId src, int dst_position) {
        return intra_[static_cast<size_t>(src - 1) * static_cast<size_t>(positions_) +
                      static_cast<size_t>(dst_position - 1)];
    }
    uint64_t& scan_cursor(RackId rack) { return scan_[static_cast<size_t>(rack - 1)]; }

private:
    int clusters_;
    int positions_;
    std::vector<int> inter_;
    std::vector<int> intra_;
    std::vector<uint64_t> scan_;
};

/// Which path a head-of-line packet should use under the load-balance
/// threshold: same-cluster packets go intra while fewer than lb_threshold
/// packets wait for intra transmission at the holder (relayed packets go
/// intra unconditionally); everything else goes over the inter AWGR,
/// directly when a band wavelength exists and two-hop otherwise.
PathChoice path_select(const Packet& packet, const ClusterAssignment& assignment,
                       const RackState& holder, int lb_threshold,
                       const TopologyParams& topo);

/// First candidate at or after the cursor in cyclic order; advances the
/// cursor past the pick. Returns 0 when candidates is empty.
Wavelength assign_wavelength(const std::vector<Wavelength>& candidates, int& cursor,
                             int wavelength_count);

/// Greedy head-of-line scheduler enforcing the three constraints:
///  C1  a transmitter or receiver carries at most one packet per slot;
///  C2  at most W/P packets per inter AWGR port pair, W/M per intra pair;
///  C3  transmitters on the same AWGR input port use distinct wavelengths.
class Scheduler {
public:
    explicit Scheduler(const TopologyParams& topo);

    /// Builds the plan for one slot, popping granted packets from their
    /// queues. Rack scan order is rotated by slot; ungranted packets stay
    /// queued.
    void schedule_slot(std::vector<RackState>& racks, const ClusterAssignment& assignment,
                       RoundRobinState& rr, int lb_threshold, uint64_t slot, SlotPlan& plan);

private:
    struct Usage {
        std::vector<uint64_t> stamp;
        std::vector<int> value;
        uint64_t now = 0;
        void init(size_t n) {
            stamp.assign(n, 0);
            value.assign(n, 0);
        }
        int get(size_t i) const { return stamp[i] == now ? value[i] : 0; }
        void inc(size_t i) {
            if (stamp[i] != now) {
                stamp[i] = now;
                value[i] = 0;
            }
            ++value[i];
        }
    };

    bool try_grant(std::vector<RackState>& racks, RackState& rack, RackId dst,
                   const ClusterAssignment& assignment, RoundRobinState& rr,
                   int lb_threshold, SlotPlan& plan);
    bool try_intra(RackState& rack, const Packet& pkt, const ClusterAssignment& assignment,
                   RoundRobinState& rr, SlotPlan& plan);
    bool try_inter(RackState& rack, const Packet& pkt, const ClusterAssignment& assignment,
                   RoundRobinState& rr, SlotPlan& plan);

    TopologyParams topo_;
    std::vector<RackId> scan_dests_; // scratch: snapshot of a rack's busy list
    // C1
    Usage tx_intra_used_, rx_intra_used_, tx_inter_used_, rx_inter_used_;
    // C2: (input, output) pair loads
    Usage inter_pair_, intra_pair_;
    // C3: wavelengths taken per inter input port / per rack's intra port
    Usage inter_lambda_, intra_lambda_;
};

} // namespace awgrsim
