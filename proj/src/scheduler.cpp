#include "awgrsim/scheduler.hpp"

namespace awgrsim {

namespace {

// First wavelength in [1, port_count] routed from input to output.
int first_routed(int input_port, int output_port, int port_count) {
    return ((output_port - input_port) % port_count + port_count) % port_count + 1;
}

// Round-robin pick over the arithmetic progression {c0, c0+step, ..., <= last}:
// first feasible candidate at or after *cursor in cyclic order.
template <typename Feasible>
Wavelength pick_cyclic(int c0, int step, int last, int& cursor, Feasible&& feasible) {
    const int count = (last - c0) / step + 1;
    int k0 = cursor <= c0 ? 0 : (cursor - c0 + step - 1) / step;
    if (k0 >= count) k0 = 0;
    for (int t = 0; t < count; ++t) {
        const int k = k0 + t < count ? k0 + t : k0 + t - count;
        const Wavelength c = c0 + k * step;
        if (feasible(c)) {
            cursor = c + 1 > last ? 1 : c + 1;
            return c;
        }
    }
    return 0;
}

} // namespace

RoundRobinState::RoundRobinState(const TopologyParams& topo)
    : clusters_(topo.cluster_count), positions_(topo.racks_per_cluster),
      inter_(static_cast<size_t>(topo.total_racks()) * static_cast<size_t>(clusters_), 1),
      intra_(static_cast<size_t>(topo.total_racks()) * static_cast<size_t>(positions_), 1),
      scan_(static_cast<size_t>(topo.total_racks()), 0) {}

PathChoice path_select(const Packet& packet, const ClusterAssignment& assignment,
                       const RackState& holder, int lb_threshold,
                       const TopologyParams& topo) {
    const bool same = assignment.same_cluster(packet.holder, packet.dst);
    if (same && (packet.hops_taken >= 1 || holder.intra_waiting() < lb_threshold))
        return PathChoice::intra;
    return direct_inter_wavelengths(packet.holder, packet.dst, assignment, topo).empty()
               ? PathChoice::inter_two_hop
               : PathChoice::inter_direct;
}

Wavelength assign_wavelength(const std::vector<Wavelength>& candidates, int& cursor,
                             int wavelength_count) {
    if (candidates.empty()) return 0;
    // candidates are kept ascending
    for (Wavelength c : candidates) {
        if (c >= cursor) {
            cursor = c + 1 > wavelength_count ? 1 : c + 1;
            return c;
        }
    }
    const Wavelength c = candidates.front(); // wrap
    cursor = c + 1 > wavelength_count ? 1 : c + 1;
    return c;
}

Scheduler::Scheduler(const TopologyParams& topo) : topo_(topo) {
    const auto racks = static_cast<size_t>(topo.total_racks());
    const auto clusters = static_cast<size_t>(topo.cluster_count);
    const auto positions = static_cast<size_t>(topo.racks_per_cluster);
    const auto lambdas = static_cast<size_t>(topo.wavelength_count);
    tx_intra_used_.init(racks);
    rx_intra_used_.init(racks);
    tx_inter_used_.init(racks);
    rx_inter_used_.init(racks);
    inter_pair_.init(clusters * clusters);
    intra_pair_.init(clusters * positions * positions);
    inter_lambda_.init(clusters * lambdas);
    intra_lambda_.init(racks * lambdas);
}

void Scheduler::schedule_slot(std::vector<RackState>& racks, const ClusterAssignment& assignment,
                              RoundRobinState& rr, int lb_threshold, uint64_t slot,
                              SlotPlan& plan) {
    plan.clear(slot);
    const uint64_t stamp = slot + 1;
    tx_intra_used_.now = rx_intra_used_.now = tx_inter_used_.now = rx_inter_used_.now = stamp;
    inter_pair_.now = intra_pair_.now = stamp;
    inter_lambda_.now = intra_lambda_.now = stamp;

    const int total = topo_.total_racks();
    for (int k = 0; k < total; ++k) {
        const RackId rack_id = static_cast<RackId>((slot + static_cast<uint64_t>(k)) %
                                                   static_cast<uint64_t>(total)) + 1;
        RackState& rack = racks[static_cast<size_t>(rack_id - 1)];
        if (rack.empty()) continue;

        // Visit this rack's busy queues cyclically from its scan cursor;
        // the busy list mutates as queues drain, so walk a snapshot.
        scan_dests_ = rack.busy_destinations();
        const size_t n = scan_dests_.size();
        const size_t start = static_cast<size_t>(rr.scan_cursor(rack_id) % n);
        for (size_t t = 0; t < n; ++t) {
            if (tx_intra_used_.get(static_cast<size_t>(rack_id - 1)) >= topo_.tx_intra &&
                tx_inter_used_.get(static_cast<size_t>(rack_id - 1)) >= topo_.tx_inter)
                break;
            const size_t at = start + t < n ? start + t : start + t - n;
            const RackId dst = scan_dests_[at];
            while (!rack.queue(dst).empty()) {
                if (!try_grant(racks, rack, dst, assignment, rr, lb_threshold, plan)) break;
            }
        }
        rr.scan_cursor(rack_id) += 1;
    }
}

bool Scheduler::try_grant(std::vector<RackState>& racks, RackState& rack, RackId dst,
                          const ClusterAssignment& assignment, RoundRobinState& rr,
                          int lb_threshold, SlotPlan& plan) {
    (void)racks;
    const Packet& pkt = rack.queue(dst).front();
    const bool same = assignment.same_cluster(rack.id(), pkt.dst);
    if (same && (pkt.hops_taken >= 1 || rack.intra_waiting() < lb_threshold))
        return try_intra(rack, pkt, assignment, rr, plan);
    return try_inter(rack, pkt, assignment, rr, plan);
}

bool Scheduler::try_intra(RackState& rack, const Packet& pkt,
                          const ClusterAssignment& assignment, RoundRobinState& rr,
                          SlotPlan& plan) {
    const RackId src = rack.id();
    const RackId dst = pkt.dst;
    const auto src_idx = static_cast<size_t>(src - 1);
    const auto dst_idx = static_cast<size_t>(dst - 1);
    if (tx_intra_used_.get(src_idx) >= topo_.tx_intra) return false;
    if (rx_intra_used_.get(dst_idx) >= topo_.rx_intra) return false;

    const int cluster = assignment.cluster_of(src);
    const int in_port = assignment.position_of(src);
    const int out_port = assignment.position_of(dst);
    const int positions = topo_.racks_per_cluster;
    const size_t pair_idx =
        (static_cast<size_t>(cluster - 1) * static_cast<size_t>(positions) +
         static_cast<size_t>(in_port - 1)) * static_cast<size_t>(positions) +
        static_cast<size_t>(out_port - 1);
    if (intra_pair_.get(pair_idx) >= topo_.wavelengths_per_intra_pair()) return false;

    const size_t lambda_base = src_idx * static_cast<size_t>(topo_.wavelength_count);
    const Wavelength c = pick_cyclic(
        first_routed(in_port, out_port, positions), positions, topo_.wavelength_count,
        rr.intra_cursor(src, out_port), [&](Wavelength w) {
            return intra_lambda_.get(lambda_base + static_cast<size_t>(w - 1)) == 0;
        });
    if (c == 0) return false;

    tx_intra_used_.inc(src_idx);
    rx_intra_used_.inc(dst_idx);
    intra_pair_.inc(pair_idx);
    intra_lambda_.inc(lambda_base + static_cast<size_t>(c - 1));

    Grant g;
    g.packet = rack.pop_head(dst, true);
    g.path = PathChoice::intra;
    g.wavelength = c;
    g.next_holder = dst;
    g.tx_index = tx_intra_used_.get(src_idx);
    g.src_port = in_port;
    g.dst_port = out_port;
    plan.grants.push_back(g);
    return true;
}

bool Scheduler::try_inter(RackState& rack, const Packet& pkt,
                          const ClusterAssignment& assignment, RoundRobinState& rr,
                          SlotPlan& plan) {
    const RackId src = rack.id();
    const RackId dst = pkt.dst;
    const auto src_idx = static_cast<size_t>(src - 1);
    if (tx_inter_used_.get(src_idx) >= topo_.tx_inter) return false;

    const int src_cluster = assignment.cluster_of(src);
    const int dst_cluster = assignment.cluster_of(dst);
    const int clusters = topo_.cluster_count;
    const size_t pair_idx = static_cast<size_t>(src_cluster - 1) * static_cast<size_t>(clusters) +
                            static_cast<size_t>(dst_cluster - 1);
    if (inter_pair_.get(pair_idx) >= topo_.wavelengths_per_inter_pair()) return false;

    const size_t lambda_base =
        static_cast<size_t>(src_cluster - 1) * static_cast<size_t>(topo_.wavelength_count);
    auto lambda_free = [&](Wavelength w) {
        return inter_lambda_.get(lambda_base + static_cast<size_t>(w - 1)) == 0;
    };
    const int c0 = first_routed(src_cluster, dst_cluster, clusters);
    const int dst_position = assignment.position_of(dst);
    int& cursor = rr.inter_cursor(src, dst_cluster);

    // Direct first: a route wavelength that lands on dst's demux position.
    Wavelength c = 0;
    RackId next = 0;
    PathChoice path = PathChoice::inter_direct;
    if (rx_inter_used_.get(static_cast<size_t>(dst - 1)) < topo_.rx_inter) {
        c = pick_cyclic(c0, clusters, topo_.wavelength_count, cursor, [&](Wavelength w) {
            return band_position(w, topo_.racks_per_cluster, topo_.wavelength_count) ==
                       dst_position && lambda_free(w);
        });
        if (c != 0) next = dst;
    }
    if (c == 0) {
        // Two-hop: any other feasible relay position in dst's cluster.
        path = PathChoice::inter_two_hop;
        c = pick_cyclic(c0, clusters, topo_.wavelength_count, cursor, [&](Wavelength w) {
            const int pos = band_position(w, topo_.racks_per_cluster, topo_.wavelength_count);
            if (pos == dst_position) return false;
            const RackId relay = assignment.rack_at(dst_cluster, pos);
            if (relay == src) return false;
            if (rx_inter_used_.get(static_cast<size_t>(relay - 1)) >= topo_.rx_inter)
                return false;
            return lambda_free(w);
        });
        if (c != 0)
            next = assignment.rack_at(dst_cluster, band_position(c, topo_.racks_per_cluster,
                                                                 topo_.wavelength_count));
    }
    if (c == 0) return false;

    tx_inter_used_.inc(src_idx);
    rx_inter_used_.inc(static_cast<size_t>(next - 1));
    inter_pair_.inc(pair_idx);
    inter_lambda_.inc(lambda_base + static_cast<size_t>(c - 1));

    Grant g;
    g.packet = rack.pop_head(dst, assignment.same_cluster(src, dst));
    g.path = path;
    g.wavelength = c;
    g.next_holder = next;
    g.tx_index = tx_inter_used_.get(src_idx);
    g.src_port = src_cluster;
    g.dst_port = dst_cluster;
    plan.grants.push_back(g);
    return true;
}

} // namespace awgrsim
