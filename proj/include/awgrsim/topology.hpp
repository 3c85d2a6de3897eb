#pragma once

#include <vector>

#include "awgrsim/common.hpp"

namespace awgrsim {

/// Static fabric dimensions. The inter-cluster AWGR has one port per
/// cluster; each cluster additionally holds its own MxM intra AWGR.
struct TopologyParams {
    int cluster_count = 0;     // ports of the inter-cluster AWGR
    int racks_per_cluster = 0; // ports of each intra-cluster AWGR
    int wavelength_count = 0;
    int tx_intra = 3;
    int rx_intra = 3;
    int tx_inter = 1;
    int rx_inter = 1;

    int total_racks() const { return cluster_count * racks_per_cluster; }
    // Wavelengths routed between any fixed (input, output) pair.
    int wavelengths_per_inter_pair() const { return wavelength_count / cluster_count; }
    int wavelengths_per_intra_pair() const { return wavelength_count / racks_per_cluster; }

    /// Throws ConfigError unless counts are >= 1, the cluster count divides
    /// the wavelength count and the cluster size divides the wavelength count.
    void validate() const;
};

/// Where a rack currently sits: which cluster, and which of the M
/// coupler/demux positions inside it.
struct ClusterSlot {
    int cluster = 0;
    int position = 0;
};

/// Bijection rack <-> (cluster, position). This is the reconfigurable state
/// of the network; the cluster and wavelength switches are modeled as
/// nothing more than this remapping.
class ClusterAssignment {
public:
    ClusterAssignment() = default;

    static ClusterAssignment identity(const TopologyParams& topo);
    /// slots[r] gives the slot of rack r (index 0 unused). Throws
    /// std::invalid_argument unless the mapping is a bijection.
    static ClusterAssignment from_slots(std::vector<ClusterSlot> slots, const TopologyParams& topo);

    int cluster_count() const { return cluster_count_; }
    int racks_per_cluster() const { return racks_per_cluster_; }
    int total_racks() const { return cluster_count_ * racks_per_cluster_; }

    int cluster_of(RackId rack) const { return slots_[static_cast<size_t>(rack)].cluster; }
    int position_of(RackId rack) const { return slots_[static_cast<size_t>(rack)].position; }
    ClusterSlot slot_of(RackId rack) const { return slots_[static_cast<size_t>(rack)]; }
    RackId rack_at(int cluster, int position) const {
        return racks_[static_cast<size_t>((cluster - 1) * racks_per_cluster_ + (position - 1))];
    }
    bool same_cluster(RackId a, RackId b) const { return cluster_of(a) == cluster_of(b); }

private:
    ClusterAssignment(std::vector<ClusterSlot> slots, std::vector<RackId> racks, int clusters, int size)
        : slots_(std::move(slots)), racks_(std::move(racks)),
          cluster_count_(clusters), racks_per_cluster_(size) {}

    std::vector<ClusterSlot> slots_; // rack -> slot, 1-based
    std::vector<RackId> racks_;      // (cluster, position) -> rack, row-major
    int cluster_count_ = 0;
    int racks_per_cluster_ = 0;
};

/// Cyclic AWGR routing: wavelength c entering port i leaves on port
/// ((i + c - 2) mod ports) + 1.
int cyclic_route(int input_port, Wavelength c, int port_count);

int inter_awgr_output(const TopologyParams& topo, int input_port, Wavelength c);
int intra_awgr_output(const TopologyParams& topo, int input_port, Wavelength c);

/// All wavelengths routed from input_port to output_port on an AWGR of the
/// given size; exactly wavelength_count / port_count of them, ascending.
std::vector<Wavelength> route_wavelengths(int input_port, int output_port,
                                          int port_count, int wavelength_count);

/// Contiguous wavelength band the demultiplexer delivers to a given
/// position: {(position-1)*W/M + 1, ..., position*W/M}.
std::vector<Wavelength> receiver_band(int position, int racks_per_cluster, int wavelength_count);

/// The position whose receiver band contains wavelength c.
int band_position(Wavelength c, int racks_per_cluster, int wavelength_count);

/// Wavelengths that carry a packet from src's cluster straight to dst's
/// demux position. Empty means only a two-hop path exists.
std::vector<Wavelength> direct_inter_wavelengths(RackId src, RackId dst,
                                                 const ClusterAssignment& assignment,
                                                 const TopologyParams& topo);

struct TwoHopOption {
    Wavelength wavelength = 0;
    RackId relay = 0; // rack in dst's cluster that receives the first hop
};

/// Inter-cluster wavelengths whose demux position lands on a rack other
/// than dst, paired with that relay rack.
std::vector<TwoHopOption> two_hop_options(RackId src, RackId dst,
                                          const ClusterAssignment& assignment,
                                          const TopologyParams& topo);

} // namespace awgrsim
