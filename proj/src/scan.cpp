#include <cstring>
#include <thread>

#include "ogc/code.hpp"
#include "ogc/kernels.hpp"

namespace ogc {

namespace {

// Mixed-radix reflected Gray odometer: every transition moves one digit by
// one, so the accumulated codeword needs a single scaled-row update.
class GrayOdometer {
  public:
    GrayOdometer(std::size_t ndigits, std::uint32_t q)
        : a_(ndigits, 0), dir_(ndigits, 1), q_(static_cast<int>(q)) {}

    struct Step {
        std::size_t idx;
        int old_v;
        int new_v;
    };

    bool next(Step& s) {
        int j = static_cast<int>(a_.size()) - 1;
        while (j >= 0) {
            const int nv = a_[j] + dir_[j];
            if (nv >= 0 && nv < q_) {
                s.idx = static_cast<std::size_t>(j);
                s.old_v = a_[j];
                s.new_v = nv;
                a_[j] = nv;
                return true;
            }
            dir_[j] = -dir_[j];
            --j;
        }
        return false;
    }

    const std::vector<int>& digits() const noexcept { return a_; }

  private:
    std::vector<int> a_;
    std::vector<int> dir_;
    int q_;
};

struct ScanCtx {
    const Matrix* gen = nullptr;
    const Field* field = nullptr;
    std::uint32_t q = 0;
    std::size_t K = 0, N = 0;
    unsigned t = 0;  // digits fixed per block

    // packed representation (q = 2)
    std::size_t words = 0;
    std::vector<std::vector<std::uint64_t>> bit_rows;
    // byte representation (char 2, q <= 256): scaled copies per row
    std::vector<std::vector<std::vector<std::uint8_t>>> byte_rows;
    // wide representation (everything else)
    std::vector<std::vector<std::vector<scalar_t>>> wide_rows;

    std::vector<scalar_t> full_message(std::span<const scalar_t> prefix,
                                       const std::vector<int>& suffix) const {
        std::vector<scalar_t> m(K);
        std::copy(prefix.begin(), prefix.end(), m.begin());
        for (std::size_t i = 0; i < suffix.size(); ++i)
            m[t + i] = static_cast<scalar_t>(suffix[i]);
        return m;
    }
};

class PackedWalker {
  public:
    explicit PackedWalker(const ScanCtx& ctx)
        : ctx_(ctx), ops_(kern::active_ops()), acc_(ctx.words, 0) {}

    std::uint32_t reset(std::span<const scalar_t> prefix) {
        std::fill(acc_.begin(), acc_.end(), 0);
        std::uint32_t w = 0;
        for (std::size_t i = 0; i < prefix.size(); ++i)
            if (prefix[i]) w = ops_.xor_popcount64(acc_.data(), ctx_.bit_rows[i].data(), ctx_.words);
        return w;
    }

    std::uint32_t step(std::size_t row, scalar_t) {
        return ops_.xor_popcount64(acc_.data(), ctx_.bit_rows[row].data(), ctx_.words);
    }

    bool matches_direct(std::span<const scalar_t> message) const {
        const auto direct = vec_mat(message, *ctx_.gen);
        for (std::size_t c = 0; c < ctx_.N; ++c) {
            const bool bit = (acc_[c / 64] >> (c % 64)) & 1;
            if (bit != (direct[c] != 0)) return false;
        }
        return true;
    }

  private:
    const ScanCtx& ctx_;
    const kern::Ops& ops_;
    std::vector<std::uint64_t> acc_;
};

class ByteWalker {
  public:
    explicit ByteWalker(const ScanCtx& ctx)
        : ctx_(ctx), ops_(kern::active_ops()), acc_(ctx.N, 0) {}

    std::uint32_t reset(std::span<const scalar_t> prefix) {
        std::fill(acc_.begin(), acc_.end(), 0);
        std::uint32_t w = 0;
        for (std::size_t i = 0; i < prefix.size(); ++i)
            if (prefix[i])
                w = ops_.xor_count_nonzero8(acc_.data(), ctx_.byte_rows[i][prefix[i] - 1].data(),
                                            ctx_.N);
        return w;
    }

    std::uint32_t step(std::size_t row, scalar_t delta) {
        return ops_.xor_count_nonzero8(acc_.data(), ctx_.byte_rows[row][delta - 1].data(), ctx_.N);
    }

    bool matches_direct(std::span<const scalar_t> message) const {
        const auto direct = vec_mat(message, *ctx_.gen);
        for (std::size_t c = 0; c < ctx_.N; ++c)
            if (acc_[c] != direct[c]) return false;
        return true;
    }

  private:
    const ScanCtx& ctx_;
    const kern::Ops& ops_;
    std::vector<std::uint8_t> acc_;
};

class WideWalker {
  public:
    explicit WideWalker(const ScanCtx& ctx) : ctx_(ctx), acc_(ctx.N, 0) {}

    std::uint32_t reset(std::span<const scalar_t> prefix) {
        std::fill(acc_.begin(), acc_.end(), 0);
        std::uint32_t w = 0;
        for (std::size_t i = 0; i < prefix.size(); ++i)
            if (prefix[i]) w = fold(ctx_.wide_rows[i][prefix[i] - 1]);
        return w;
    }

    std::uint32_t step(std::size_t row, scalar_t delta) {
        return fold(ctx_.wide_rows[row][delta - 1]);
    }

    bool matches_direct(std::span<const scalar_t> message) const {
        return vec_mat(message, *ctx_.gen) == acc_;
    }

  private:
    std::uint32_t fold(const std::vector<scalar_t>& row) {
        const Field& f = *ctx_.field;
        std::uint32_t w = 0;
        for (std::size_t c = 0; c < ctx_.N; ++c) {
            acc_[c] = f.add(acc_[c], row[c]);
            w += acc_[c] != 0;
        }
        return w;
    }

    const ScanCtx& ctx_;
    std::vector<scalar_t> acc_;
};

struct BlockAccum {
    std::uint64_t min_w = UINT64_MAX;
    std::uint64_t min_count = 0;
    std::vector<std::vector<scalar_t>> wits;
    bool wits_complete = true;
    std::vector<std::uint64_t> hist;
};

template <class Walker>
void scan_range(const ScanCtx& ctx, std::uint64_t b_begin, std::uint64_t b_end,
                const ScanOptions& opts, BlockAccum& out) {
    Walker walker(ctx);
    const std::size_t s = ctx.K - ctx.t;
    std::vector<scalar_t> prefix(ctx.t);
    if (opts.spectrum) out.hist.assign(ctx.N + 1, 0);

    for (std::uint64_t b = b_begin; b < b_end; ++b) {
        std::uint64_t x = b;
        for (std::size_t i = ctx.t; i-- > 0;) {
            prefix[i] = static_cast<scalar_t>(x % ctx.q);
            x /= ctx.q;
        }
        GrayOdometer od(s, ctx.q);

        const auto record = [&](std::uint32_t wgt) {
            if (opts.spectrum) ++out.hist[wgt];
            if (wgt < out.min_w) {
                out.min_w = wgt;
                out.min_count = 1;
                out.wits.clear();
                out.wits_complete = true;
                if (opts.witnesses) out.wits.push_back(ctx.full_message(prefix, od.digits()));
            } else if (wgt == out.min_w) {
                ++out.min_count;
                if (opts.witnesses) {
                    if (out.wits.size() < opts.max_witnesses)
                        out.wits.push_back(ctx.full_message(prefix, od.digits()));
                    else
                        out.wits_complete = false;
                }
            }
        };

        std::uint32_t w = walker.reset(prefix);
        if (b != 0) record(w);
        GrayOdometer::Step st;
        while (od.next(st)) {
            const auto delta = ctx.field->sub(static_cast<scalar_t>(st.new_v),
                                              static_cast<scalar_t>(st.old_v));
            w = walker.step(ctx.t + st.idx, delta);
            record(w);
        }
        if (!walker.matches_direct(ctx.full_message(prefix, od.digits())))
            fail(errc::internal_inconsistency, "scan accumulator diverged from direct encoding");
    }
}

void merge(BlockAccum& g, BlockAccum& l, const ScanOptions& opts) {
    if (opts.spectrum) {
        if (g.hist.empty()) g.hist.assign(l.hist.size(), 0);
        for (std::size_t i = 0; i < l.hist.size(); ++i) g.hist[i] += l.hist[i];
    }
    if (l.min_w < g.min_w) {
        g.min_w = l.min_w;
        g.min_count = l.min_count;
        g.wits = std::move(l.wits);
        g.wits_complete = l.wits_complete;
    } else if (l.min_w == g.min_w && l.min_w != UINT64_MAX) {
        g.min_count += l.min_count;
        for (auto& m : l.wits) {
            if (g.wits.size() < opts.max_witnesses)
                g.wits.push_back(std::move(m));
            else
                g.wits_complete = false;
        }
        g.wits_complete = g.wits_complete && l.wits_complete;
    }
}

}  // namespace

ScanResult exhaustive_scan(const Matrix& gen_reduced, const ScanOptions& opts) {
    if (gen_reduced.rows() == 0) fail(errc::dimension_mismatch, "empty generator matrix");
    ScanCtx ctx;
    ctx.gen = &gen_reduced;
    ctx.field = gen_reduced.field().get();
    ctx.q = ctx.field->q();
    ctx.K = gen_reduced.rows();
    ctx.N = gen_reduced.cols();

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < ctx.K; ++i) {
        if (total > (std::uint64_t(1) << 62) / ctx.q)
            fail(errc::budget_exceeded, "q^K overflows any practical budget; use structural methods");
        total *= ctx.q;
    }
    if (total > opts.budget)
        fail(errc::budget_exceeded,
             "q^K = " + std::to_string(total) + " exceeds the budget of " +
                 std::to_string(opts.budget) + " codeword evaluations; use structural methods");

    enum class Repr { packed, bytes, wide } repr;
    if (ctx.q == 2)
        repr = Repr::packed;
    else if (ctx.field->char2() && ctx.q <= 256)
        repr = Repr::bytes;
    else
        repr = Repr::wide;

    if (repr == Repr::packed) {
        ctx.words = (ctx.N + 63) / 64;
        ctx.bit_rows.assign(ctx.K, std::vector<std::uint64_t>(ctx.words, 0));
        for (std::size_t r = 0; r < ctx.K; ++r)
            for (std::size_t c = 0; c < ctx.N; ++c)
                if (gen_reduced.at(r, c)) ctx.bit_rows[r][c / 64] |= std::uint64_t(1) << (c % 64);
    } else if (repr == Repr::bytes) {
        ctx.byte_rows.resize(ctx.K);
        for (std::size_t r = 0; r < ctx.K; ++r) {
            ctx.byte_rows[r].assign(ctx.q - 1, std::vector<std::uint8_t>(ctx.N));
            for (std::uint32_t lam = 1; lam < ctx.q; ++lam)
                for (std::size_t c = 0; c < ctx.N; ++c)
                    ctx.byte_rows[r][lam - 1][c] = static_cast<std::uint8_t>(
                        ctx.field->mul(static_cast<scalar_t>(lam), gen_reduced.at(r, c)));
        }
    } else {
        ctx.wide_rows.resize(ctx.K);
        for (std::size_t r = 0; r < ctx.K; ++r) {
            ctx.wide_rows[r].assign(ctx.q - 1, std::vector<scalar_t>(ctx.N));
            for (std::uint32_t lam = 1; lam < ctx.q; ++lam)
                for (std::size_t c = 0; c < ctx.N; ++c)
                    ctx.wide_rows[r][lam - 1][c] =
                        ctx.field->mul(static_cast<scalar_t>(lam), gen_reduced.at(r, c));
        }
    }

    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    unsigned workers = opts.workers ? opts.workers : hw;
    // The block structure depends only on (q, K), so the visit order — and
    // with it the witness list — is identical for every worker count.
    std::uint64_t blocks = 1;
    while (blocks < 64 && ctx.t + 1 < ctx.K && blocks * ctx.q <= 4096) {
        blocks *= ctx.q;
        ++ctx.t;
    }
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));

    std::vector<BlockAccum> local(workers);
    const auto run = [&](unsigned wi) {
        const std::uint64_t b0 = blocks * wi / workers;
        const std::uint64_t b1 = blocks * (wi + 1) / workers;
        switch (repr) {
            case Repr::packed: scan_range<PackedWalker>(ctx, b0, b1, opts, local[wi]); break;
            case Repr::bytes: scan_range<ByteWalker>(ctx, b0, b1, opts, local[wi]); break;
            case Repr::wide: scan_range<WideWalker>(ctx, b0, b1, opts, local[wi]); break;
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned wi = 0; wi < workers; ++wi) pool.emplace_back(run, wi);
        for (auto& th : pool) th.join();
    }

    BlockAccum g;
    for (auto& l : local) merge(g, l, opts);

    ScanResult res;
    res.enumerated = total - 1;
    res.d_min = g.min_w;
    res.min_count = g.min_count;
    res.witness_messages = std::move(g.wits);
    res.witnesses_complete = g.wits_complete;
    if (opts.spectrum)
        for (std::size_t w = 0; w < g.hist.size(); ++w)
            if (g.hist[w]) res.spectrum.emplace_back(w, g.hist[w]);
    return res;
}

}  // namespace ogc
