#pragma once

#include <cstdint>
#include <vector>

#include "hypercast/network.hpp"
#include "hypercast/rates.hpp"

namespace hypercast {

// Coefficient rows a node has accumulated, kept in reduced echelon form over
// GF(2^8). Row length is the generation size G; rank == rows.size().
struct NodeBuffer {
    int generation_size = 0;
    std::vector<std::vector<std::uint8_t>> rows;
    std::vector<int> pivot;  // pivot column of each row, strictly increasing order not required

    int rank() const { return static_cast<int>(rows.size()); }
    bool full() const { return rank() == generation_size; }
};

NodeBuffer make_buffer(int generation_size);

// Source buffer: holds the whole generation (identity rows, rank G).
NodeBuffer make_source_buffer(int generation_size);

// Folds one received coefficient vector into the buffer. Returns true when
// the vector was innovative (rank grew).
// pre: coeff.size() == generation_size
bool rank_update(NodeBuffer& buffer, const std::vector<std::uint8_t>& coeff);

struct SimReport {
    int generation_size = 0;
    int rounds = 0;                      // rounds actually executed
    std::int64_t transmissions = 0;      // packets sent
    std::int64_t receptions = 0;         // packet arrivals, all receivers
    std::int64_t innovative = 0;         // arrivals that grew a rank
    double innovation_ratio = 0.0;       // innovative / receptions
    bool decoded_all = false;            // every node reached rank G
    std::vector<int> final_rank;         // per node
    // Per-round ranks (rank_trace[round][node]); filled when tracing.
    std::vector<std::vector<int>> rank_trace;
};

struct SimOptions {
    int max_rounds = 64;
    bool trace_ranks = false;
    // When false the run continues to max_rounds even after everyone has
    // decoded (all later receptions are necessarily non-innovative).
    bool stop_when_decoded = true;
};

// Synchronous random linear network coding broadcast. Each round, every node
// with a nonempty buffer sends rate(v) packets, each a uniformly random
// combination of its rows; packets land at the end of the round (one-round
// store-and-forward delay), applied in (receiver, sender, packet) order.
// Lossless and collision-free. Single seeded stream: reports are
// reproducible bit for bit.
// pre: generation_size >= 1, max_rounds >= 1
SimReport run_broadcast(const Network& net, const RateAssignment& rates, int generation_size,
                        std::uint64_t seed, const SimOptions& options = {});

}  // namespace hypercast
