#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqmo/lstm.hpp"
#include "seqmo/matrix.hpp"
#include "seqmo/pairing.hpp"
#include "seqmo/permutation.hpp"
#include "seqmo/rng.hpp"

namespace seqmo {

// Training on a non-finite loss signals divergence; the CLI maps this to its
// own exit code.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TrainConfig {
    std::size_t batch_size = 128;
    double learn_rate = 0.001;
    std::size_t epochs = 200;
    std::size_t hidden_units = 200;
    std::size_t embedding_dim = 64;
    double dropout = 0.05;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_eps = 1e-8;
    double grad_clip_norm = 5.0;

    void validate() const {
        if (batch_size == 0 || epochs == 0 || hidden_units == 0 || embedding_dim == 0)
            throw std::invalid_argument("TrainConfig: sizes must be positive");
        if (learn_rate <= 0.0) throw std::invalid_argument("TrainConfig: learn_rate must be positive");
        if (dropout < 0.0 || dropout >= 1.0)
            throw std::invalid_argument("TrainConfig: dropout must be in [0,1)");
    }
};

// Encoder-decoder pointer network. The decoder scores source positions with
// the same bilinear form used for attention, so outputs are always drawn
// from the input sequence.
struct PointerNetParams {
    std::size_t n_max = 0;          // token vocabulary size
    std::size_t embedding_dim = 0;  // d
    std::size_t hidden_units = 0;   // H

    Matrix embedding;                // n_max x d
    std::vector<double> start_token; // d, learned decoder start input
    LstmWeights encoder;             // input d -> hidden H
    LstmWeights decoder;
    Matrix attention;                // W_a, H x H
    Matrix output;                   // W_c, H x 2H
};

// Gradient (or Adam moment) storage shaped like the parameters.
struct PointerNetTensors {
    Matrix embedding;
    std::vector<double> start_token;
    LstmGrads encoder, decoder;
    Matrix attention, output;
};

inline PointerNetTensors make_tensors_like(const PointerNetParams& p) {
    PointerNetTensors t;
    t.embedding = Matrix(p.embedding.rows(), p.embedding.cols(), 0.0);
    t.start_token.assign(p.start_token.size(), 0.0);
    t.encoder = make_lstm_grads(p.encoder);
    t.decoder = make_lstm_grads(p.decoder);
    t.attention = Matrix(p.attention.rows(), p.attention.cols(), 0.0);
    t.output = Matrix(p.output.rows(), p.output.cols(), 0.0);
    return t;
}

struct TensorView {
    const char* name;
    std::vector<double>* data;
};

inline std::vector<TensorView> tensor_views(PointerNetParams& p) {
    return {{"embedding", &p.embedding.data()},
            {"start_token", &p.start_token},
            {"encoder.w_input", &p.encoder.w_input.data()},
            {"encoder.w_hidden", &p.encoder.w_hidden.data()},
            {"encoder.bias", &p.encoder.bias},
            {"decoder.w_input", &p.decoder.w_input.data()},
            {"decoder.w_hidden", &p.decoder.w_hidden.data()},
            {"decoder.bias", &p.decoder.bias},
            {"attention", &p.attention.data()},
            {"output", &p.output.data()}};
}

inline std::vector<TensorView> tensor_views(PointerNetTensors& t) {
    return {{"embedding", &t.embedding.data()},
            {"start_token", &t.start_token},
            {"encoder.w_input", &t.encoder.w_input.data()},
            {"encoder.w_hidden", &t.encoder.w_hidden.data()},
            {"encoder.bias", &t.encoder.bias},
            {"decoder.w_input", &t.decoder.w_input.data()},
            {"decoder.w_hidden", &t.decoder.w_hidden.data()},
            {"decoder.bias", &t.decoder.bias},
            {"attention", &t.attention.data()},
            {"output", &t.output.data()}};
}

namespace detail {

inline void fill_uniform(std::vector<double>& v, double bound, RngStream& rng) {
    for (double& x : v) x = rng.uniform(-bound, bound);
}

}  // namespace detail

// Scaled uniform init per tensor; forget-gate biases start at 1.
inline PointerNetParams init_pointer_net(std::size_t n_max, const TrainConfig& cfg, RngStream& rng) {
    if (n_max == 0) throw std::invalid_argument("init_pointer_net: n_max must be positive");
    PointerNetParams p;
    p.n_max = n_max;
    p.embedding_dim = cfg.embedding_dim;
    p.hidden_units = cfg.hidden_units;
    const std::size_t d = cfg.embedding_dim, h = cfg.hidden_units;

    p.embedding = Matrix(n_max, d);
    detail::fill_uniform(p.embedding.data(), 1.0 / std::sqrt(static_cast<double>(d)), rng);
    p.start_token.assign(d, 0.0);
    detail::fill_uniform(p.start_token, 1.0 / std::sqrt(static_cast<double>(d)), rng);

    p.encoder = make_lstm_weights(d, h);
    p.decoder = make_lstm_weights(d, h);
    for (LstmWeights* w : {&p.encoder, &p.decoder}) {
        detail::fill_uniform(w->w_input.data(), 1.0 / std::sqrt(static_cast<double>(d)), rng);
        detail::fill_uniform(w->w_hidden.data(), 1.0 / std::sqrt(static_cast<double>(h)), rng);
        std::fill(w->bias.begin(), w->bias.end(), 0.0);
        for (std::size_t r = h; r < 2 * h; ++r) w->bias[r] = 1.0;  // forget gate
    }

    p.attention = Matrix(h, h);
    detail::fill_uniform(p.attention.data(), 1.0 / std::sqrt(static_cast<double>(h)), rng);
    p.output = Matrix(h, 2 * h);
    detail::fill_uniform(p.output.data(), 1.0 / std::sqrt(2.0 * static_cast<double>(h)), rng);
    return p;
}

// ---- spec-level building blocks, also used by the full forward pass ----

// softmax over bilinear scores h_t . q_s where q_s = W_a hbar_s
inline std::vector<double> attention_weights(const std::vector<double>& h_t,
                                             const std::vector<std::vector<double>>& q) {
    if (q.empty()) throw std::invalid_argument("attention_weights: no encoder states");
    std::vector<double> scores(q.size());
    for (std::size_t s = 0; s < q.size(); ++s)
        scores[s] = std::inner_product(h_t.begin(), h_t.end(), q[s].begin(), 0.0);
    const double m = *std::max_element(scores.begin(), scores.end());
    double total = 0.0;
    for (double& sc : scores) {
        sc = std::exp(sc - m);
        total += sc;
    }
    for (double& sc : scores) sc /= total;
    return scores;
}

inline std::vector<double> precompute_attention_keys_row(const Matrix& w_a,
                                                         const std::vector<double>& enc_state) {
    std::vector<double> qrow(w_a.rows(), 0.0);
    matvec(w_a, enc_state.data(), qrow.data());
    return qrow;
}

// c_t = sum_s kappa(s) hbar_s
inline std::vector<double> context_vector(const std::vector<double>& kappa,
                                          const std::vector<std::vector<double>>& enc_h) {
    if (kappa.size() != enc_h.size())
        throw std::invalid_argument("context_vector: weight/state count mismatch");
    std::vector<double> c(enc_h.front().size(), 0.0);
    for (std::size_t s = 0; s < enc_h.size(); ++s)
        for (std::size_t r = 0; r < c.size(); ++r) c[r] += kappa[s] * enc_h[s][r];
    return c;
}

// hhat_t = tanh(W_c [c_t; h_t])
inline std::vector<double> output_state(const Matrix& w_c, const std::vector<double>& context,
                                        const std::vector<double>& h_t) {
    if (w_c.cols() != context.size() + h_t.size())
        throw std::invalid_argument("output_state: shape mismatch");
    std::vector<double> u(w_c.cols());
    std::copy(context.begin(), context.end(), u.begin());
    std::copy(h_t.begin(), h_t.end(), u.begin() + static_cast<std::ptrdiff_t>(context.size()));
    std::vector<double> hhat(w_c.rows(), 0.0);
    matvec(w_c, u.data(), hhat.data());
    for (double& x : hhat) x = std::tanh(x);
    return hhat;
}

// Masked softmax over source positions; visited positions get probability 0.
inline std::vector<double> pointer_distribution(const std::vector<double>& hhat,
                                                const std::vector<std::vector<double>>& q,
                                                const std::vector<char>& visited) {
    if (visited.size() != q.size())
        throw std::invalid_argument("pointer_distribution: mask size mismatch");
    double m = -std::numeric_limits<double>::infinity();
    std::vector<double> logits(q.size(), 0.0);
    for (std::size_t s = 0; s < q.size(); ++s) {
        if (visited[s]) continue;
        logits[s] = std::inner_product(hhat.begin(), hhat.end(), q[s].begin(), 0.0);
        m = std::max(m, logits[s]);
    }
    if (m == -std::numeric_limits<double>::infinity())
        throw std::invalid_argument("pointer_distribution: every position is masked");
    std::vector<double> probs(q.size(), 0.0);
    double total = 0.0;
    for (std::size_t s = 0; s < q.size(); ++s) {
        if (visited[s]) continue;
        probs[s] = std::exp(logits[s] - m);
        total += probs[s];
    }
    for (double& pr : probs) pr /= total;
    return probs;
}

namespace detail {

struct DecoderStepCache {
    LstmStepCache lstm;
    std::vector<double> kappa;    // S attention weights
    std::vector<double> context;  // H
    std::vector<double> hhat;     // H
    std::vector<double> probs;    // S pointer probabilities
    std::size_t target = 0;
};

struct PairForwardCache {
    std::vector<LstmStepCache> enc_steps;
    std::vector<std::vector<double>> enc_h;  // S x H
    std::vector<std::vector<double>> q;      // S x H, q_s = W_a hbar_s
    std::vector<DecoderStepCache> dec_steps;
    std::vector<int> input_tokens;    // data permutation values
    std::vector<int> decoder_tokens;  // -1 for the start token, else label value
    std::vector<std::vector<double>> enc_drop, dec_drop;  // dropout scale masks
    double loss = 0.0;
};

// scale mask: 0 with probability p, else 1/(1-p)
inline std::vector<double> dropout_mask(std::size_t n, double p, RngStream* rng) {
    std::vector<double> m(n, 1.0);
    if (p <= 0.0 || rng == nullptr) return m;
    const double keep_scale = 1.0 / (1.0 - p);
    for (double& x : m) x = rng->bernoulli(p) ? 0.0 : keep_scale;
    return m;
}

inline std::vector<double> embed_token(const PointerNetParams& p, int token) {
    const std::size_t row = static_cast<std::size_t>(token);
    if (row >= p.embedding.rows())
        throw std::invalid_argument("pointer net: token exceeds embedding table");
    return std::vector<double>(p.embedding.row(row), p.embedding.row(row) + p.embedding.cols());
}

// Teacher-forced forward pass for one (data, label) pair. Loss is the
// cross-entropy against the label's source positions summed over the
// sequence; training leaves positions unmasked, the mask only constrains
// decoding.
inline void forward_pair(const PointerNetParams& p, const Permutation& data,
                         const Permutation& label, double dropout_p, RngStream* dropout_rng,
                         PairForwardCache& cache) {
    const std::size_t n = data.size();
    const std::size_t hidden = p.hidden_units;

    cache.input_tokens.assign(data.order().begin(), data.order().end());
    cache.enc_steps.resize(n);
    cache.enc_h.resize(n);
    cache.q.resize(n);
    cache.enc_drop.resize(n);
    cache.dec_drop.resize(n);
    cache.dec_steps.resize(n);
    cache.decoder_tokens.resize(n);

    // positions of each label value within the data sequence
    std::vector<std::size_t> position_of(n);
    for (std::size_t s = 0; s < n; ++s)
        position_of[static_cast<std::size_t>(cache.input_tokens[s])] = s;

    std::vector<double> h(hidden, 0.0), c(hidden, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<double> x = embed_token(p, cache.input_tokens[s]);
        cache.enc_drop[s] = dropout_mask(x.size(), dropout_p, dropout_rng);
        for (std::size_t r = 0; r < x.size(); ++r) x[r] *= cache.enc_drop[s][r];
        lstm_step(p.encoder, x, h, c, cache.enc_steps[s]);
        h = cache.enc_steps[s].h;
        c = cache.enc_steps[s].c;
        cache.enc_h[s] = h;
        cache.q[s] = precompute_attention_keys_row(p.attention, h);
    }

    cache.loss = 0.0;
    const std::vector<char> no_mask(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
        DecoderStepCache& step = cache.dec_steps[t];
        const int token = (t == 0) ? -1 : label[t - 1];
        cache.decoder_tokens[t] = token;
        std::vector<double> x = (token < 0) ? p.start_token : embed_token(p, token);
        cache.dec_drop[t] = dropout_mask(x.size(), dropout_p, dropout_rng);
        for (std::size_t r = 0; r < x.size(); ++r) x[r] *= cache.dec_drop[t][r];

        lstm_step(p.decoder, x, h, c, step.lstm);
        h = step.lstm.h;
        c = step.lstm.c;

        step.kappa = attention_weights(h, cache.q);
        step.context = context_vector(step.kappa, cache.enc_h);
        step.hhat = output_state(p.output, step.context, h);
        step.probs = pointer_distribution(step.hhat, cache.q, no_mask);
        step.target = position_of[static_cast<std::size_t>(label[t])];
        cache.loss -= std::log(std::max(step.probs[step.target], 1e-300));
    }
}

// Backward pass matching forward_pair; gradients are scaled by `weight`
// (1/batch) and accumulated into `grads`.
inline void backward_pair(const PointerNetParams& p, const PairForwardCache& cache, double weight,
                          PointerNetTensors& grads) {
    const std::size_t n = cache.enc_h.size();
    const std::size_t hidden = p.hidden_units;

    std::vector<std::vector<double>> d_enc_h(n, std::vector<double>(hidden, 0.0));
    std::vector<std::vector<double>> dq(n, std::vector<double>(hidden, 0.0));

    std::vector<double> dh(hidden, 0.0), dc(hidden, 0.0);
    std::vector<double> dx, dh_prev;
    for (std::size_t ti = n; ti-- > 0;) {
        const auto& step = cache.dec_steps[ti];

        // pointer softmax cross-entropy
        std::vector<double> dz(step.probs);
        dz[step.target] -= 1.0;
        for (double& v : dz) v *= weight;

        std::vector<double> dhhat(hidden, 0.0);
        for (std::size_t s = 0; s < n; ++s) {
            for (std::size_t r = 0; r < hidden; ++r) {
                dhhat[r] += dz[s] * cache.q[s][r];
                dq[s][r] += dz[s] * step.hhat[r];
            }
        }

        // hhat = tanh(W_c [context; h])
        std::vector<double> da(hidden);
        for (std::size_t r = 0; r < hidden; ++r)
            da[r] = dhhat[r] * (1.0 - step.hhat[r] * step.hhat[r]);
        std::vector<double> u(2 * hidden);
        std::copy(step.context.begin(), step.context.end(), u.begin());
        std::copy(step.lstm.h.begin(), step.lstm.h.end(), u.begin() + static_cast<std::ptrdiff_t>(hidden));
        add_outer(grads.output, da.data(), u.data());
        std::vector<double> du(2 * hidden, 0.0);
        matvec_transposed(p.output, da.data(), du.data());

        std::vector<double> dcontext(du.begin(), du.begin() + static_cast<std::ptrdiff_t>(hidden));
        for (std::size_t r = 0; r < hidden; ++r) dh[r] += du[hidden + r];

        // context = sum_s kappa(s) enc_h[s]
        std::vector<double> dkappa(n, 0.0);
        for (std::size_t s = 0; s < n; ++s) {
            double acc = 0.0;
            for (std::size_t r = 0; r < hidden; ++r) {
                acc += dcontext[r] * cache.enc_h[s][r];
                d_enc_h[s][r] += step.kappa[s] * dcontext[r];
            }
            dkappa[s] = acc;
        }

        // softmax backward
        double dot = 0.0;
        for (std::size_t s = 0; s < n; ++s) dot += step.kappa[s] * dkappa[s];
        for (std::size_t s = 0; s < n; ++s) {
            const double dscore = step.kappa[s] * (dkappa[s] - dot);
            for (std::size_t r = 0; r < hidden; ++r) {
                dh[r] += dscore * cache.q[s][r];
                dq[s][r] += dscore * step.lstm.h[r];
            }
        }

        lstm_step_backward(p.decoder, step.lstm, dh, dc, grads.decoder, dx, dh_prev);
        dh = dh_prev;

        // decoder input gradient, through its dropout mask
        const int token = cache.decoder_tokens[ti];
        if (token < 0) {
            for (std::size_t r = 0; r < dx.size(); ++r)
                grads.start_token[r] += dx[r] * cache.dec_drop[ti][r];
        } else {
            double* erow = grads.embedding.row(static_cast<std::size_t>(token));
            for (std::size_t r = 0; r < dx.size(); ++r) erow[r] += dx[r] * cache.dec_drop[ti][r];
        }
    }

    // q_s = W_a enc_h[s]; both attention scores and pointer logits feed dq
    for (std::size_t s = 0; s < n; ++s) {
        add_outer(grads.attention, dq[s].data(), cache.enc_h[s].data());
        std::vector<double> back(hidden, 0.0);
        matvec_transposed(p.attention, dq[s].data(), back.data());
        for (std::size_t r = 0; r < hidden; ++r) d_enc_h[s][r] += back[r];
    }

    // encoder unroll; dh/dc arrive from the decoder's initial state
    for (std::size_t si = n; si-- > 0;) {
        for (std::size_t r = 0; r < hidden; ++r) dh[r] += d_enc_h[si][r];
        lstm_step_backward(p.encoder, cache.enc_steps[si], dh, dc, grads.encoder, dx, dh_prev);
        dh = dh_prev;
        double* erow = grads.embedding.row(static_cast<std::size_t>(cache.input_tokens[si]));
        for (std::size_t r = 0; r < dx.size(); ++r) erow[r] += dx[r] * cache.enc_drop[si][r];
    }
}

}  // namespace detail

// Mean loss (summed over sequence positions) across the given pairs, with
// gradients accumulated into `grads` when non-null. Dropout fires only when
// an rng is supplied.
inline double pointer_net_loss(const PointerNetParams& p, const std::vector<TrainingPair>& pairs,
                               double dropout_p, RngStream* dropout_rng,
                               PointerNetTensors* grads) {
    if (pairs.empty()) throw std::invalid_argument("pointer_net_loss: no pairs");
    const double weight = 1.0 / static_cast<double>(pairs.size());
    double loss = 0.0;
    detail::PairForwardCache cache;
    for (const auto& pair : pairs) {
        detail::forward_pair(p, pair.data, pair.label, dropout_p, dropout_rng, cache);
        loss += weight * cache.loss;
        if (grads) detail::backward_pair(p, cache, weight, *grads);
    }
    return loss;
}

struct AdamState {
    std::vector<std::vector<double>> m, v;
    long step = 0;
};

// One Adam update from accumulated gradients, with global-norm clipping.
inline void adam_step(PointerNetParams& params, PointerNetTensors& grads, AdamState& state,
                      const TrainConfig& cfg) {
    auto pviews = tensor_views(params);
    auto gviews = tensor_views(grads);

    if (state.m.empty()) {
        state.m.resize(pviews.size());
        state.v.resize(pviews.size());
        for (std::size_t i = 0; i < pviews.size(); ++i) {
            state.m[i].assign(pviews[i].data->size(), 0.0);
            state.v[i].assign(pviews[i].data->size(), 0.0);
        }
    }

    double sq_norm = 0.0;
    for (auto& g : gviews)
        for (double x : *g.data) sq_norm += x * x;
    const double norm = std::sqrt(sq_norm);
    const double scale = (cfg.grad_clip_norm > 0.0 && norm > cfg.grad_clip_norm)
                             ? cfg.grad_clip_norm / norm
                             : 1.0;

    ++state.step;
    const double bc1 = 1.0 - std::pow(cfg.adam_beta1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(cfg.adam_beta2, static_cast<double>(state.step));
    for (std::size_t i = 0; i < pviews.size(); ++i) {
        auto& p = *pviews[i].data;
        auto& g = *gviews[i].data;
        auto& m = state.m[i];
        auto& v = state.v[i];
        for (std::size_t j = 0; j < p.size(); ++j) {
            const double gj = g[j] * scale;
            m[j] = cfg.adam_beta1 * m[j] + (1.0 - cfg.adam_beta1) * gj;
            v[j] = cfg.adam_beta2 * v[j] + (1.0 - cfg.adam_beta2) * gj * gj;
            const double mhat = m[j] / bc1;
            const double vhat = v[j] / bc2;
            p[j] -= cfg.learn_rate * mhat / (std::sqrt(vhat) + cfg.adam_eps);
        }
    }
}

struct TrainResult {
    std::vector<double> epoch_losses;
};

// Supervised training: shuffled mini-batches, teacher forcing, Adam. Returns
// the per-epoch loss trace.
inline TrainResult train(PointerNetParams& params, AdamState& adam, const PairSet& pairs,
                         const TrainConfig& cfg, RngStream& rng) {
    cfg.validate();
    if (pairs.pairs.empty()) throw std::invalid_argument("train: empty pair set");
    for (const auto& pair : pairs.pairs)
        if (pair.data.size() > params.n_max || pair.label.size() != pair.data.size())
            throw std::invalid_argument("train: pair length exceeds network capacity");

    const std::size_t count = pairs.pairs.size();
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});

    TrainResult result;
    result.epoch_losses.reserve(cfg.epochs);
    PointerNetTensors grads = make_tensors_like(params);

    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        // Fisher-Yates over the pair order
        for (std::size_t i = count - 1; i > 0; --i) {
            const std::size_t j = static_cast<std::size_t>(rng.next_below(i + 1));
            std::swap(order[i], order[j]);
        }

        double epoch_loss = 0.0;
        for (std::size_t begin = 0; begin < count; begin += cfg.batch_size) {
            const std::size_t end = std::min(begin + cfg.batch_size, count);
            std::vector<TrainingPair> batch;
            batch.reserve(end - begin);
            for (std::size_t i = begin; i < end; ++i) batch.push_back(pairs.pairs[order[i]]);

            for (auto& view : tensor_views(grads)) std::fill(view.data->begin(), view.data->end(), 0.0);
            const double loss =
                pointer_net_loss(params, batch, cfg.dropout, cfg.dropout > 0.0 ? &rng : nullptr, &grads);
            if (!std::isfinite(loss)) throw DivergenceError("train: non-finite loss");
            epoch_loss += loss * static_cast<double>(batch.size());
            adam_step(params, grads, adam, cfg);
        }
        result.epoch_losses.push_back(epoch_loss / static_cast<double>(count));
    }
    return result;
}

// Greedy masked decode: every output is a permutation of the input's values.
inline Permutation decode_greedy(const PointerNetParams& p, const Permutation& data) {
    const std::size_t n = data.size();
    const std::size_t hidden = p.hidden_units;

    std::vector<std::vector<double>> enc_h(n), q(n);
    std::vector<double> h(hidden, 0.0), c(hidden, 0.0);
    LstmStepCache scratch;
    for (std::size_t s = 0; s < n; ++s) {
        const std::vector<double> x = detail::embed_token(p, data[s]);
        lstm_step(p.encoder, x, h, c, scratch);
        h = scratch.h;
        c = scratch.c;
        enc_h[s] = h;
        q[s] = precompute_attention_keys_row(p.attention, h);
    }

    std::vector<char> visited(n, 0);
    std::vector<int> out;
    out.reserve(n);
    int prev_token = -1;
    for (std::size_t t = 0; t < n; ++t) {
        const std::vector<double> x = (prev_token < 0) ? p.start_token : detail::embed_token(p, prev_token);
        lstm_step(p.decoder, x, h, c, scratch);
        h = scratch.h;
        c = scratch.c;

        const std::vector<double> kappa = attention_weights(h, q);
        const std::vector<double> context = context_vector(kappa, enc_h);
        const std::vector<double> hhat = output_state(p.output, context, h);
        const std::vector<double> probs = pointer_distribution(hhat, q, visited);

        std::size_t best = 0;
        double best_p = -1.0;
        for (std::size_t s = 0; s < n; ++s) {
            if (visited[s]) continue;
            if (probs[s] > best_p) {
                best_p = probs[s];
                best = s;
            }
        }
        visited[best] = 1;
        prev_token = data[best];
        out.push_back(prev_token);
    }
    return Permutation(std::move(out));
}

inline std::vector<Permutation> predict(const PointerNetParams& p,
                                        const std::vector<Permutation>& data) {
    std::vector<Permutation> out;
    out.reserve(data.size());
    for (const auto& d : data) out.push_back(decode_greedy(p, d));
    return out;
}

// ---- checkpoint format: versioned header + shape-tagged tensor blocks ----

inline constexpr const char* kCheckpointFormatTag = "seqmo pointer-net checkpoint v1";

inline void save_checkpoint(const PointerNetParams& params, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_checkpoint: cannot open " + path);
    out << kCheckpointFormatTag << '\n';
    out << "n_max " << params.n_max << '\n';
    out << "embedding_dim " << params.embedding_dim << '\n';
    out << "hidden_units " << params.hidden_units << '\n';
    auto views = tensor_views(const_cast<PointerNetParams&>(params));
    for (const auto& view : views) {
        out << "tensor " << view.name << ' ' << view.data->size() << '\n';
        char buf[40];
        for (std::size_t i = 0; i < view.data->size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", (*view.data)[i]);
            out << buf << ((i + 1) % 8 == 0 || i + 1 == view.data->size() ? '\n' : ' ');
        }
    }
    out << "end\n";
    if (!out) throw std::runtime_error("save_checkpoint: write failed for " + path);
}

inline PointerNetParams load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_checkpoint: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != kCheckpointFormatTag)
        throw std::runtime_error("load_checkpoint: bad format tag in " + path);

    auto read_kv = [&](const std::string& key) -> std::size_t {
        std::string k;
        std::size_t value = 0;
        if (!(in >> k >> value) || k != key)
            throw std::runtime_error("load_checkpoint: expected '" + key + "' in " + path);
        return value;
    };
    PointerNetParams p;
    p.n_max = read_kv("n_max");
    p.embedding_dim = read_kv("embedding_dim");
    p.hidden_units = read_kv("hidden_units");

    p.embedding = Matrix(p.n_max, p.embedding_dim);
    p.start_token.assign(p.embedding_dim, 0.0);
    p.encoder = make_lstm_weights(p.embedding_dim, p.hidden_units);
    p.decoder = make_lstm_weights(p.embedding_dim, p.hidden_units);
    p.attention = Matrix(p.hidden_units, p.hidden_units);
    p.output = Matrix(p.hidden_units, 2 * p.hidden_units);

    for (auto& view : tensor_views(p)) {
        std::string tag, name;
        std::size_t count = 0;
        if (!(in >> tag >> name >> count) || tag != "tensor" || name != view.name ||
            count != view.data->size())
            throw std::runtime_error("load_checkpoint: tensor block mismatch for '" +
                                     std::string(view.name) + "' in " + path);
        for (std::size_t i = 0; i < count; ++i)
            if (!(in >> (*view.data)[i]))
                throw std::runtime_error("load_checkpoint: truncated tensor '" +
                                         std::string(view.name) + "' in " + path);
    }
    std::string trailer;
    if (!(in >> trailer) || trailer != "end")
        throw std::runtime_error("load_checkpoint: missing trailer in " + path);
    return p;
}

}  // namespace seqmo
