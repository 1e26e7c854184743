// Copyright (c) 2026 The lyapcert authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAPCERT_NETWORK_HPP
#define LYAPCERT_NETWORK_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "lyapcert/expr.hpp"
#include "lyapcert/rng.hpp"

namespace lyap {

struct DenseLayer {
  Eigen::MatrixXd W;
  Eigen::VectorXd b;
};

// Feedforward tanh network with a scalar output. Hidden activations are
// always tanh (smoothness is load-bearing: the falsifier needs exact Lie
// derivatives); the output layer is linear unless final_tanh is set.
// Instances are immutable snapshots; training builds updated copies.
class LyapunovNet {
public:
  LyapunovNet() = default;
  LyapunovNet(std::vector<DenseLayer> layers, bool final_tanh);

  static LyapunovNet random(int input_dim, const std::vector<int> &hidden,
                            bool final_tanh, Rng &rng);
  static LyapunovNet zeros(int input_dim, const std::vector<int> &hidden,
                           bool final_tanh);

  int input_dim() const;
  int n_layers() const { return static_cast<int>(layers_.size()); }
  bool final_tanh() const { return final_tanh_; }
  const std::vector<DenseLayer> &layers() const { return layers_; }
  std::size_t param_count() const;

  // V(x)
  double forward(const Eigen::VectorXd &x) const;

  // grad_x V(x), exact backprop
  Eigen::VectorXd input_gradient(const Eigen::VectorXd &x) const;

  // V(x) together with grad_x V(x) . v in a single tangent pass
  struct Directional {
    double value;
    double directional;
  };
  Directional forward_with_directional(const Eigen::VectorXd &x,
                                       const Eigen::VectorXd &v) const;

  // Symbolic copy of forward(); point evaluation of the result tracks
  // forward() to a few ulps.
  Expr compile() const;

  // in-place parameter update: theta += scale * g (g has matching shapes)
  void axpy(double scale, const std::vector<DenseLayer> &g);

private:
  bool is_tanh_layer(std::size_t l) const {
    return l + 1 < layers_.size() || final_tanh_;
  }

  std::vector<DenseLayer> layers_;
  bool final_tanh_ = false;
};

// Parameter-shaped gradient accumulator for a LyapunovNet.
struct NetGrad {
  std::vector<DenseLayer> layers;

  static NetGrad zeros_like(const LyapunovNet &net);
  void set_zero();
  double max_abs() const;
};

// Accumulates  c_value * grad_theta V(x)  +  c_dir * grad_theta (grad_x V(x) . v)
// into g. The second term is the parameter gradient of a directional
// derivative, obtained by differentiating the tangent-augmented forward pass
// (forward-over-reverse).
void accumulate_param_gradient(const LyapunovNet &net, const Eigen::VectorXd &x,
                               const Eigen::VectorXd &v, double c_value,
                               double c_dir, NetGrad &g);

// u(x) = K x. No bias: the feedback preserves the equilibrium at the origin.
struct LinearController {
  Eigen::MatrixXd K; // m x n

  int n_inputs() const { return static_cast<int>(K.rows()); }
  int n_states() const { return static_cast<int>(K.cols()); }
  Eigen::VectorXd control(const Eigen::VectorXd &x) const { return K * x; }
};

// State-space domain of validity.
struct Domain {
  enum class Shape { Ball, Box };
  Shape shape = Shape::Ball;
  double radius = 1.0;
  lyap::Box box;

  static Domain ball(double r) {
    Domain d;
    d.shape = Shape::Ball;
    d.radius = r;
    return d;
  }
  static Domain make_box(lyap::Box b) {
    Domain d;
    d.shape = Shape::Box;
    d.box = std::move(b);
    return d;
  }

  bool is_ball() const { return shape == Shape::Ball; }
  lyap::Box bounding_box(int n) const;
  bool contains(const std::vector<double> &x) const;
  double volume(int n) const;
};

// Open-loop controlled dynamics dx/dt = f(x, u): n expressions over the
// variables Var(0..n-1) = states and Var(n..n+m-1) = inputs.
struct SystemSpec {
  std::string name;
  int n = 0;
  int m = 0;
  std::vector<Expr> f;
  Domain domain;

  void validate() const;
};

// Substitutes u_j = sum_i K(j,i) x_i into the open-loop dynamics; the result
// contains only state variables.
std::vector<Expr> closed_loop(const SystemSpec &system,
                              const LinearController &ctrl);

// grad_x V(x) . f(x, Kx) with exact network gradients.
double lie_derivative_at(const LyapunovNet &net, const SystemSpec &system,
                         const LinearController &ctrl,
                         const Eigen::VectorXd &x);

Expr compile_V(const LyapunovNet &net);
Expr compile_lieV(const LyapunovNet &net, const SystemSpec &system,
                  const LinearController &ctrl);

} // namespace lyap

#endif // LYAPCERT_NETWORK_HPP
