#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "awgrsim/topology.hpp"
#include "awgrsim/traffic.hpp"

namespace awgrsim {

/// FIFO of packets backed by a compacting vector.
class PacketQueue {
public:
    bool empty() const { return head_ == buf_.size(); }
    size_t size() const { return buf_.size() - head_; }
    const Packet& front() const { return buf_[head_]; }

    void push(const Packet& p) { buf_.push_back(p); }
    Packet pop() {
        Packet p = buf_[head_++];
        if (head_ >= 64 && head_ * 2 >= buf_.size()) {
            buf_.erase(buf_.begin(), buf_.begin() + static_cast<ptrdiff_t>(head_));
            head_ = 0;
        }
        return p;
    }
    const Packet& at(size_t i) const { return buf_[head_ + i]; }

private:
    std::vector<Packet> buf_;
    size_t head_ = 0;
};

/// S x S symmetric matrix of queued-packet counts between rack pairs
/// (a->b plus b->a), zero diagonal. 1-based indexing.
class MutualMatrix {
public:
    MutualMatrix() = default;
    explicit MutualMatrix(int total_racks)
        : n_(total_racks),
          data_(static_cast<size_t>(total_racks) * static_cast<size_t>(total_racks), 0) {}

    int size() const { return n_; }
    int64_t at(RackId a, RackId b) const { return data_[idx(a, b)]; }
    void add(RackId a, RackId b, int64_t count) {
        data_[idx(a, b)] += count;
        data_[idx(b, a)] += count;
    }
    void clear() { std::fill(data_.begin(), data_.end(), 0); }

private:
    size_t idx(RackId a, RackId b) const {
        return static_cast<size_t>(a - 1) * static_cast<size_t>(n_) + static_cast<size_t>(b - 1);
    }
    int n_ = 0;
    std::vector<int64_t> data_;
};

/// What the controller sees when it samples the buffers.
struct OccupancySnapshot {
    int64_t intra_waiting = 0; // queued packets whose dst shares the holder's cluster
    int64_t inter_waiting = 0;
    MutualMatrix mutual;
};

/// One rack's virtual buffers: a FIFO per destination rack, all sharing a
/// single byte budget. Tail drop on overflow.
class RackState {
public:
    RackState(RackId id, int total_racks, int64_t capacity_bits)
        : id_(id), capacity_bits_(capacity_bits),
          queues_(static_cast<size_t>(total_racks) + 1),
          queue_list_index_(static_cast<size_t>(total_racks) + 1, -1) {}

    RackId id() const { return id_; }
    int64_t buffered_bits() const { return buffered_bits_; }
    int64_t capacity_bits() const { return capacity_bits_; }
    size_t packet_count() const { return packet_count_; }
    bool empty() const { return packet_count_ == 0; }
    int64_t intra_waiting() const { return intra_waiting_; }
    int64_t inter_waiting() const { return inter_waiting_; }
    uint64_t drops() const { return drops_; }
    uint64_t accepted() const { return accepted_; }

    const PacketQueue& queue(RackId dst) const { return queues_[static_cast<size_t>(dst)]; }
    /// Destinations with at least one queued packet (unordered).
    const std::vector<RackId>& busy_destinations() const { return busy_dests_; }

    /// Admission against the shared buffer. dst_in_same_cluster classifies
    /// the packet against the holder's current cluster.
    bool enqueue(const Packet& p, bool dst_in_same_cluster) {
        assert(p.holder == id_);
        if (buffered_bits_ + p.size_bits > capacity_bits_) {
            ++drops_;
            return false;
        }
        PacketQueue& q = queues_[static_cast<size_t>(p.dst)];
        if (q.empty()) {
            queue_list_index_[static_cast<size_t>(p.dst)] = static_cast<int>(busy_dests_.size());
            busy_dests_.push_back(p.dst);
        }
        q.push(p);
        buffered_bits_ += p.size_bits;
        ++packet_count_;
        ++accepted_;
        (dst_in_same_cluster ? intra_waiting_ : inter_waiting_) += 1;
        return true;
    }

    Packet pop_head(RackId dst, bool dst_in_same_cluster) {
        PacketQueue& q = queues_[static_cast<size_t>(dst)];
        assert(!q.empty());
        Packet p = q.pop();
        buffered_bits_ -= p.size_bits;
        --packet_count_;
        (dst_in_same_cluster ? intra_waiting_ : inter_waiting_) -= 1;
        if (q.empty()) {
            const int at = queue_list_index_[static_cast<size_t>(dst)];
            const RackId moved = busy_dests_.back();
            busy_dests_[static_cast<size_t>(at)] = moved;
            queue_list_index_[static_cast<size_t>(moved)] = at;
            busy_dests_.pop_back();
            queue_list_index_[static_cast<size_t>(dst)] = -1;
        }
        return p;
    }

    /// Recount the intra/inter split against a (new) assignment.
    void reclassify(const ClusterAssignment& assignment) {
        intra_waiting_ = 0;
        inter_waiting_ = 0;
        const int own_cluster = assignment.cluster_of(id_);
        for (RackId dst : busy_dests_) {
            const auto n = static_cast<int64_t>(queues_[static_cast<size_t>(dst)].size());
            (assignment.cluster_of(dst) == own_cluster ? intra_waiting_ : inter_waiting_) += n;
        }
    }

private:
    RackId id_;
    int64_t capacity_bits_;
    std::vector<PacketQueue> queues_; // by destination rack, index 0 unused
    std::vector<int> queue_list_index_;
    std::vector<RackId> busy_dests_;
    int64_t buffered_bits_ = 0;
    size_t packet_count_ = 0;
    int64_t intra_waiting_ = 0;
    int64_t inter_waiting_ = 0;
    uint64_t drops_ = 0;
    uint64_t accepted_ = 0;
};

/// Full controller sample: global intra/inter totals plus the mutual
/// matrix over (holder, final destination) pairs.
OccupancySnapshot take_snapshot(const std::vector<RackState>& racks,
                                const ClusterAssignment& assignment);

/// The intra/inter totals alone (cheap; no matrix).
void occupancy_totals(const std::vector<RackState>& racks, int64_t& intra, int64_t& inter);

} // namespace awgrsim
