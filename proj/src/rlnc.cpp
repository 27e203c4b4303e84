#include "hypercast/rlnc.hpp"

#include <stdexcept>

#include "hypercast/gf256.hpp"
#include "hypercast/rng.hpp"

namespace hypercast {

namespace {

// dst ^= c * src over GF(2^8)
void add_scaled(std::vector<std::uint8_t>& dst, const std::vector<std::uint8_t>& src,
                std::uint8_t c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= gf256::mul(c, src[i]);
}

}  // namespace

NodeBuffer make_buffer(int generation_size) {
    if (generation_size < 1) throw std::invalid_argument("make_buffer: generation size >= 1");
    NodeBuffer buffer;
    buffer.generation_size = generation_size;
    return buffer;
}

NodeBuffer make_source_buffer(int generation_size) {
    NodeBuffer buffer = make_buffer(generation_size);
    for (int i = 0; i < generation_size; ++i) {
        std::vector<std::uint8_t> row(static_cast<std::size_t>(generation_size), 0);
        row[static_cast<std::size_t>(i)] = 1;
        buffer.rows.push_back(std::move(row));
        buffer.pivot.push_back(i);
    }
    return buffer;
}

bool rank_update(NodeBuffer& buffer, const std::vector<std::uint8_t>& coeff) {
    if (coeff.size() != static_cast<std::size_t>(buffer.generation_size))
        throw std::invalid_argument("rank_update: coefficient vector has the wrong length");
    if (buffer.full()) return false;

    std::vector<std::uint8_t> reduced = coeff;
    for (std::size_t row = 0; row < buffer.rows.size(); ++row) {
        const std::uint8_t factor = reduced[static_cast<std::size_t>(buffer.pivot[row])];
        add_scaled(reduced, buffer.rows[row], factor);
    }
    std::size_t lead = 0;
    while (lead < reduced.size() && reduced[lead] == 0) ++lead;
    if (lead == reduced.size()) return false;

    const std::uint8_t scale = gf256::inv(reduced[lead]);
    for (auto& value : reduced) value = gf256::mul(value, scale);
    for (std::size_t row = 0; row < buffer.rows.size(); ++row) {
        const std::uint8_t factor = buffer.rows[row][lead];
        add_scaled(buffer.rows[row], reduced, factor);
    }
    buffer.rows.push_back(std::move(reduced));
    buffer.pivot.push_back(static_cast<int>(lead));
    return true;
}

SimReport run_broadcast(const Network& net, const RateAssignment& rates, int generation_size,
                        std::uint64_t seed, const SimOptions& options) {
    const int n = net.size();
    if (generation_size < 1)
        throw std::invalid_argument("run_broadcast: generation size must be >= 1");
    if (options.max_rounds < 1)
        throw std::invalid_argument("run_broadcast: max_rounds must be >= 1");
    if (rates.rate.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("run_broadcast: rates do not match the network");

    const auto arcs = build_hyperarcs(net);
    Rng rng(seed);

    std::vector<NodeBuffer> buffer;
    buffer.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        buffer.push_back(v == net.source_id ? make_source_buffer(generation_size)
                                            : make_buffer(generation_size));

    SimReport report;
    report.generation_size = generation_size;
    report.final_rank.assign(static_cast<std::size_t>(n), 0);

    // Packets in flight this round, gathered per receiver so delivery order
    // is (receiver, sender, packet) regardless of how sending interleaves.
    std::vector<std::vector<std::vector<std::uint8_t>>> inbox(static_cast<std::size_t>(n));

    auto all_decoded = [&] {
        for (const NodeBuffer& b : buffer)
            if (!b.full()) return false;
        return true;
    };

    for (int round = 0; round < options.max_rounds; ++round) {
        for (auto& box : inbox) box.clear();

        for (int v = 0; v < n; ++v) {
            const NodeBuffer& b = buffer[static_cast<std::size_t>(v)];
            if (b.rank() == 0) continue;  // nothing to say yet
            const auto& targets = arcs[static_cast<std::size_t>(v)].targets;
            for (std::int64_t shot = 0; shot < rates.rate[static_cast<std::size_t>(v)];
                 ++shot) {
                std::vector<std::uint8_t> packet(static_cast<std::size_t>(generation_size), 0);
                for (const auto& row : b.rows) add_scaled(packet, row, rng.next_byte());
                ++report.transmissions;
                for (int u : targets) inbox[static_cast<std::size_t>(u)].push_back(packet);
            }
        }

        for (int u = 0; u < n; ++u) {
            for (const auto& packet : inbox[static_cast<std::size_t>(u)]) {
                ++report.receptions;
                if (rank_update(buffer[static_cast<std::size_t>(u)], packet))
                    ++report.innovative;
            }
        }

        ++report.rounds;
        if (options.trace_ranks) {
            std::vector<int> snapshot(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) snapshot[static_cast<std::size_t>(v)] =
                buffer[static_cast<std::size_t>(v)].rank();
            report.rank_trace.push_back(std::move(snapshot));
        }
        if (options.stop_when_decoded && all_decoded()) break;
    }

    for (int v = 0; v < n; ++v)
        report.final_rank[static_cast<std::size_t>(v)] = buffer[static_cast<std::size_t>(v)].rank();
    report.decoded_all = all_decoded();
    report.innovation_ratio =
        report.receptions == 0
            ? 0.0
            : static_cast<double>(report.innovative) / static_cast<double>(report.receptions);
    return report;
}

}  // namespace hypercast
