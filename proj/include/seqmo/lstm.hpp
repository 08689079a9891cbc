#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "seqmo/matrix.hpp"
#include "seqmo/rng.hpp"

namespace seqmo {

// Gate rows are stacked [input, forget, cell, output], each block H rows.
struct LstmWeights {
    Matrix w_input;            // 4H x input_dim
    Matrix w_hidden;           // 4H x H
    std::vector<double> bias;  // 4H

    std::size_t hidden_size() const { return w_hidden.cols(); }
    std::size_t input_size() const { return w_input.cols(); }
};

inline LstmWeights make_lstm_weights(std::size_t input_dim, std::size_t hidden, double fill = 0.0) {
    LstmWeights w;
    w.w_input = Matrix(4 * hidden, input_dim, fill);
    w.w_hidden = Matrix(4 * hidden, hidden, fill);
    w.bias.assign(4 * hidden, fill);
    return w;
}

// Everything the backward pass needs from one forward step.
struct LstmStepCache {
    std::vector<double> x, h_prev, c_prev;
    std::vector<double> gate_i, gate_f, gate_g, gate_o;  // activated
    std::vector<double> c, tanh_c, h;
};

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// h' = o * tanh(c'), c' = f * c + i * g with the usual gate activations.
inline void lstm_step(const LstmWeights& w, const std::vector<double>& x,
                      const std::vector<double>& h_prev, const std::vector<double>& c_prev,
                      LstmStepCache& cache) {
    const std::size_t hidden = w.hidden_size();
    if (x.size() != w.input_size() || h_prev.size() != hidden || c_prev.size() != hidden)
        throw std::invalid_argument("lstm_step: shape mismatch");

    std::vector<double> pre(4 * hidden);
    matvec(w.w_input, x.data(), pre.data());
    std::vector<double> pre_h(4 * hidden);
    matvec(w.w_hidden, h_prev.data(), pre_h.data());
    for (std::size_t r = 0; r < 4 * hidden; ++r) pre[r] += pre_h[r] + w.bias[r];

    cache.x = x;
    cache.h_prev = h_prev;
    cache.c_prev = c_prev;
    cache.gate_i.resize(hidden);
    cache.gate_f.resize(hidden);
    cache.gate_g.resize(hidden);
    cache.gate_o.resize(hidden);
    cache.c.resize(hidden);
    cache.tanh_c.resize(hidden);
    cache.h.resize(hidden);

    for (std::size_t r = 0; r < hidden; ++r) {
        cache.gate_i[r] = sigmoid(pre[r]);
        cache.gate_f[r] = sigmoid(pre[hidden + r]);
        cache.gate_g[r] = std::tanh(pre[2 * hidden + r]);
        cache.gate_o[r] = sigmoid(pre[3 * hidden + r]);
        cache.c[r] = cache.gate_f[r] * c_prev[r] + cache.gate_i[r] * cache.gate_g[r];
        cache.tanh_c[r] = std::tanh(cache.c[r]);
        cache.h[r] = cache.gate_o[r] * cache.tanh_c[r];
    }
}

struct LstmGrads {
    Matrix w_input;
    Matrix w_hidden;
    std::vector<double> bias;
};

inline LstmGrads make_lstm_grads(const LstmWeights& w) {
    LstmGrads g;
    g.w_input = Matrix(w.w_input.rows(), w.w_input.cols(), 0.0);
    g.w_hidden = Matrix(w.w_hidden.rows(), w.w_hidden.cols(), 0.0);
    g.bias.assign(w.bias.size(), 0.0);
    return g;
}

// Backpropagates (dh, dc) through one step; accumulates weight gradients and
// writes input/state gradients. dc carries the incoming cell-state gradient
// and is overwritten with dc_prev.
inline void lstm_step_backward(const LstmWeights& w, const LstmStepCache& cache,
                               const std::vector<double>& dh, std::vector<double>& dc,
                               LstmGrads& grads, std::vector<double>& dx,
                               std::vector<double>& dh_prev) {
    const std::size_t hidden = w.hidden_size();
    std::vector<double> da(4 * hidden);

    for (std::size_t r = 0; r < hidden; ++r) {
        const double do_ = dh[r] * cache.tanh_c[r];
        const double dcell = dc[r] + dh[r] * cache.gate_o[r] * (1.0 - cache.tanh_c[r] * cache.tanh_c[r]);
        const double di = dcell * cache.gate_g[r];
        const double df = dcell * cache.c_prev[r];
        const double dg = dcell * cache.gate_i[r];
        dc[r] = dcell * cache.gate_f[r];  // becomes dc_prev

        da[r] = di * cache.gate_i[r] * (1.0 - cache.gate_i[r]);
        da[hidden + r] = df * cache.gate_f[r] * (1.0 - cache.gate_f[r]);
        da[2 * hidden + r] = dg * (1.0 - cache.gate_g[r] * cache.gate_g[r]);
        da[3 * hidden + r] = do_ * cache.gate_o[r] * (1.0 - cache.gate_o[r]);
    }

    add_outer(grads.w_input, da.data(), cache.x.data());
    add_outer(grads.w_hidden, da.data(), cache.h_prev.data());
    for (std::size_t r = 0; r < 4 * hidden; ++r) grads.bias[r] += da[r];

    dx.assign(w.input_size(), 0.0);
    matvec_transposed(w.w_input, da.data(), dx.data());
    dh_prev.assign(hidden, 0.0);
    matvec_transposed(w.w_hidden, da.data(), dh_prev.data());
}

}  // namespace seqmo
