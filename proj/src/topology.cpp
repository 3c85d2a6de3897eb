#include "awgrsim/topology.hpp"

#include <numeric>

namespace awgrsim {

void TopologyParams::validate() const {
    auto fail = [](const std::string& msg) { throw ConfigError("topology: " + msg); };
    if (cluster_count < 1) fail("cluster_count must be >= 1");
    if (racks_per_cluster < 1) fail("racks_per_cluster must be >= 1");
    if (wavelength_count < 1) fail("wavelength_count must be >= 1");
    if (wavelength_count % cluster_count != 0)
        fail("cluster_count (" + std::to_string(cluster_count) +
             ") must divide wavelength_count (" + std::to_string(wavelength_count) + ")");
    if (wavelength_count % racks_per_cluster != 0)
        fail("racks_per_cluster (" + std::to_string(racks_per_cluster) +
             ") must divide wavelength_count (" + std::to_string(wavelength_count) + ")");
    if (tx_intra < 1 || rx_intra < 1 || tx_inter < 1 || rx_inter < 1)
        fail("transceiver counts must be >= 1");
}

ClusterAssignment ClusterAssignment::identity(const TopologyParams& topo) {
    const int total = topo.total_racks();
    std::vector<ClusterSlot> slots(static_cast<size_t>(total) + 1);
    std::vector<RackId> racks(static_cast<size_t>(total));
    for (RackId r = 1; r <= total; ++r) {
        const int cluster = (r - 1) / topo.racks_per_cluster + 1;
        const int position = (r - 1) % topo.racks_per_cluster + 1;
        slots[static_cast<size_t>(r)] = {cluster, position};
        racks[static_cast<size_t>((cluster - 1) * topo.racks_per_cluster + (position - 1))] = r;
    }
    return ClusterAssignment(std::move(slots), std::move(racks),
                             topo.cluster_count, topo.racks_per_cluster);
}

ClusterAssignment ClusterAssignment::from_slots(std::vector<ClusterSlot> slots,
                                                const TopologyParams& topo) {
    const int total = topo.total_racks();
    if (slots.size() != static_cast<size_t>(total) + 1)
        throw std::invalid_argument("cluster assignment: expected one slot per rack");
    std::vector<RackId> racks(static_cast<size_t>(total), 0);
    for (RackId r = 1; r <= total; ++r) {
        const ClusterSlot s = slots[static_cast<size_t>(r)];
        if (s.cluster < 1 || s.cluster > topo.cluster_count ||
            s.position < 1 || s.position > topo.racks_per_cluster)
            throw std::invalid_argument("cluster assignment: slot out of range for rack " +
                                        std::to_string(r));
        RackId& cell = racks[static_cast<size_t>((s.cluster - 1) * topo.racks_per_cluster +
                                                 (s.position - 1))];
        if (cell != 0)
            throw std::invalid_argument("cluster assignment: slot occupied twice (cluster " +
                                        std::to_string(s.cluster) + ", position " +
                                        std::to_string(s.position) + ")");
        cell = r;
    }
    return ClusterAssignment(std::move(slots), std::move(racks),
                             topo.cluster_count, topo.racks_per_cluster);
}

int cyclic_route(int input_port, Wavelength c, int port_count) {
    if (port_count < 1) throw std::invalid_argument("AWGR port count must be >= 1");
    if (input_port < 1 || input_port > port_count)
        throw std::invalid_argument("AWGR input port " + std::to_string(input_port) +
                                    " outside [1, " + std::to_string(port_count) + "]");
    if (c < 1) throw std::invalid_argument("wavelength index must be >= 1");
    return (input_port + c - 2) % port_count + 1;
}

int inter_awgr_output(const TopologyParams& topo, int input_port, Wavelength c) {
    if (c > topo.wavelength_count)
        throw std::invalid_argument("wavelength " + std::to_string(c) + " outside [1, " +
                                    std::to_string(topo.wavelength_count) + "]");
    return cyclic_route(input_port, c, topo.cluster_count);
}

int intra_awgr_output(const TopologyParams& topo, int input_port, Wavelength c) {
    if (c > topo.wavelength_count)
        throw std::invalid_argument("wavelength " + std::to_string(c) + " outside [1, " +
                                    std::to_string(topo.wavelength_count) + "]");
    return cyclic_route(input_port, c, topo.racks_per_cluster);
}

namespace {

// First wavelength in [1, port_count] routed from input to output.
int first_routed_wavelength(int input_port, int output_port, int port_count) {
    return ((output_port - input_port) % port_count + port_count) % port_count + 1;
}

void check_divides(int port_count, int wavelength_count) {
    if (port_count < 1 || wavelength_count < 1 || wavelength_count % port_count != 0)
        throw ConfigError("port count " + std::to_string(port_count) +
                          " must divide wavelength count " + std::to_string(wavelength_count));
}

} // namespace

std::vector<Wavelength> route_wavelengths(int input_port, int output_port,
                                          int port_count, int wavelength_count) {
    check_divides(port_count, wavelength_count);
    if (input_port < 1 || input_port > port_count || output_port < 1 || output_port > port_count)
        throw std::invalid_argument("AWGR port outside [1, " + std::to_string(port_count) + "]");
    std::vector<Wavelength> out;
    out.reserve(static_cast<size_t>(wavelength_count / port_count));
    for (Wavelength c = first_routed_wavelength(input_port, output_port, port_count);
         c <= wavelength_count; c += port_count)
        out.push_back(c);
    return out;
}

std::vector<Wavelength> receiver_band(int position, int racks_per_cluster, int wavelength_count) {
    check_divides(racks_per_cluster, wavelength_count);
    if (position < 1 || position > racks_per_cluster)
        throw std::invalid_argument("demux position outside [1, " +
                                    std::to_string(racks_per_cluster) + "]");
    const int band = wavelength_count / racks_per_cluster;
    std::vector<Wavelength> out(static_cast<size_t>(band));
    std::iota(out.begin(), out.end(), (position - 1) * band + 1);
    return out;
}

int band_position(Wavelength c, int racks_per_cluster, int wavelength_count) {
    check_divides(racks_per_cluster, wavelength_count);
    if (c < 1 || c > wavelength_count)
        throw std::invalid_argument("wavelength outside [1, " +
                                    std::to_string(wavelength_count) + "]");
    return (c - 1) / (wavelength_count / racks_per_cluster) + 1;
}

std::vector<Wavelength> direct_inter_wavelengths(RackId src, RackId dst,
                                                 const ClusterAssignment& assignment,
                                                 const TopologyParams& topo) {
    const int dst_position = assignment.position_of(dst);
    std::vector<Wavelength> out;
    for (Wavelength c = first_routed_wavelength(assignment.cluster_of(src),
                                                assignment.cluster_of(dst), topo.cluster_count);
         c <= topo.wavelength_count; c += topo.cluster_count) {
        if (band_position(c, topo.racks_per_cluster, topo.wavelength_count) == dst_position)
            out.push_back(c);
    }
    return out;
}

std::vector<TwoHopOption> two_hop_options(RackId src, RackId dst,
                                          const ClusterAssignment& assignment,
                                          const TopologyParams& topo) {
    const int dst_cluster = assignment.cluster_of(dst);
    std::vector<TwoHopOption> out;
    for (Wavelength c = first_routed_wavelength(assignment.cluster_of(src), dst_cluster,
                                                topo.cluster_count);
         c <= topo.wavelength_count; c += topo.cluster_count) {
        const RackId relay = assignment.rack_at(
            dst_cluster, band_position(c, topo.racks_per_cluster, topo.wavelength_count));
        if (relay != dst) out.push_back({c, relay});
    }
    return out;
}

} // namespace awgrsim
