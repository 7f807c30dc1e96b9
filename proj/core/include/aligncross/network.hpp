#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "aligncross/types.hpp"

namespace aligncross {

// Feed-forward classifier of depth D+1: D hidden ReLU layers and a softmax
// output layer. Weight matrix d has rows indexed by the incoming layer and
// columns by the outgoing layer.

struct Architecture {
  int input_dim = 0;
  std::vector<int> hidden_sizes;  // length D >= 1
  int output_dim = 0;             // number of classes

  int depth() const { return static_cast<int>(hidden_sizes.size()); }

  // 0 = input layer, 1..D = hidden layers, D+1 = output layer.
  int layer_size(int layer) const;

  void validate() const;  // throws std::invalid_argument

  bool operator==(const Architecture&) const = default;
};

struct Network {
  Architecture architecture;
  std::vector<Matrix> weights;  // D+1 matrices; weights[d] is layer_size(d) x layer_size(d+1)
  std::vector<Vector> biases;   // D+1 vectors, one per non-input layer

  void validate() const;  // shape consistency and finiteness
};

struct Dataset {
  Matrix inputs;           // n x m, one example per row
  Eigen::VectorXi labels;  // n, class indices

  Eigen::Index size() const { return inputs.rows(); }

  // Rejects NaN/Inf inputs, size mismatch and (if num_classes >= 0)
  // out-of-range labels.
  void validate(int num_classes = -1) const;
};

struct TrainConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int batch_size = 128;
  int epochs = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

struct ForwardResult {
  std::vector<Matrix> hidden;  // D matrices, n x p_d, post-ReLU activations
  Matrix probabilities;        // n x output_dim, each row sums to 1
};

struct Evaluation {
  double loss = 0.0;      // mean cross-entropy
  double accuracy = 0.0;  // argmax matches, ties broken by lowest class index
};

struct Gradients {
  std::vector<Matrix> weights;
  std::vector<Vector> biases;
};

struct EpochStats {
  int epoch = 0;     // 1-based
  double loss = 0.0;      // mean minibatch loss over the epoch
  double accuracy = 0.0;  // mean minibatch accuracy over the epoch
};

struct TrainResult {
  Network network;
  std::vector<EpochStats> history;
};

// Weight entries drawn i.i.d. Normal(0, 1/sqrt(fan_in)) where fan_in is the
// number of incoming connections (row count of the matrix); biases zero.
// Deterministic for a fixed seed.
Network init_network(const Architecture& arch, std::uint64_t seed);

ForwardResult forward(const Network& net, const Matrix& inputs);

Evaluation evaluate(const Network& net, const Dataset& data);

// Mean cross-entropy over the batch and its gradient for every parameter.
std::pair<double, Gradients> loss_gradients(const Network& net, const Dataset& batch);

// Minibatch Adam on the cross-entropy loss; shuffling is seeded by
// cfg.seed, so training is deterministic. The input network is not modified.
TrainResult train_adam(const Network& net, const Dataset& train, const TrainConfig& cfg);

}  // namespace aligncross
