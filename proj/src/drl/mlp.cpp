#include "drl/mlp.hpp"

#include <cmath>
#include <stdexcept>

namespace sfwnav {

DenseNet::DenseNet(std::vector<int> layer_sizes) : sizes_(std::move(layer_sizes)) {
  if (sizes_.size() < 2) throw std::invalid_argument("DenseNet needs >= 2 layer sizes");
  std::ptrdiff_t offset = 0;
  for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
    w_offsets_.push_back(offset);
    offset += static_cast<std::ptrdiff_t>(sizes_[l + 1]) * sizes_[l];
    b_offsets_.push_back(offset);
    offset += sizes_[l + 1];
  }
  params_ = Eigen::VectorXd::Zero(offset);
}

DenseNet DenseNet::init_fan_in(std::vector<int> layer_sizes, Rng& rng) {
  DenseNet net(std::move(layer_sizes));
  std::ptrdiff_t idx = 0;
  for (int l = 0; l < net.layer_count(); ++l) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(net.sizes_[l]));
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(net.sizes_[l + 1]) * net.sizes_[l] +
                             net.sizes_[l + 1];
    for (std::ptrdiff_t i = 0; i < n; ++i) net.params_[idx++] = rng.uniform(-bound, bound);
  }
  return net;
}

Eigen::Map<const Eigen::MatrixXd> DenseNet::weight(int layer) const {
  return {params_.data() + w_offsets_[layer], sizes_[layer + 1], sizes_[layer]};
}

Eigen::Map<const Eigen::VectorXd> DenseNet::bias(int layer) const {
  return {params_.data() + b_offsets_[layer], sizes_[layer + 1]};
}

Eigen::MatrixXd DenseNet::forward(const Eigen::MatrixXd& x) const {
  Eigen::MatrixXd a = x;
  for (int l = 0; l < layer_count(); ++l) {
    Eigen::MatrixXd z = weight(l) * a;
    z.colwise() += bias(l);
    if (l + 1 < layer_count()) z = z.cwiseMax(0.0);
    a = std::move(z);
  }
  return a;
}

Eigen::MatrixXd DenseNet::forward(const Eigen::MatrixXd& x, Cache& cache) const {
  cache.act.clear();
  cache.act.reserve(layer_count() + 1);
  cache.act.push_back(x);
  for (int l = 0; l < layer_count(); ++l) {
    Eigen::MatrixXd z = weight(l) * cache.act.back();
    z.colwise() += bias(l);
    if (l + 1 < layer_count()) z = z.cwiseMax(0.0);
    cache.act.push_back(std::move(z));
  }
  return cache.act.back();
}

Eigen::MatrixXd DenseNet::backward(const Cache& cache, const Eigen::MatrixXd& d_out,
                                   Eigen::VectorXd* param_grad) const {
  Eigen::MatrixXd delta = d_out;
  for (int l = layer_count() - 1; l >= 0; --l) {
    if (l + 1 < layer_count()) {
      // The rectifier's gradient gate, recovered from the post-activation.
      delta = delta.cwiseProduct(
          (cache.act[l + 1].array() > 0.0).cast<double>().matrix());
    }
    if (param_grad) {
      Eigen::Map<Eigen::MatrixXd> dW(param_grad->data() + w_offsets_[l], sizes_[l + 1],
                                     sizes_[l]);
      Eigen::Map<Eigen::VectorXd> db(param_grad->data() + b_offsets_[l], sizes_[l + 1]);
      dW.noalias() += delta * cache.act[l].transpose();
      db += delta.rowwise().sum();
    }
    if (l > 0) {
      delta = weight(l).transpose() * delta;
    } else {
      return weight(0).transpose() * delta;
    }
  }
  return delta;
}

void DenseNet::polyak_from(const DenseNet& src, double tau) {
  params_ = tau * src.params_ + (1.0 - tau) * params_;
}

void Adam::step(Eigen::VectorXd& params, const Eigen::VectorXd& grad) {
  ++t_;
  m_ = beta1_ * m_ + (1.0 - beta1_) * grad;
  v_ = beta2_ * v_ + (1.0 - beta2_) * grad.cwiseProduct(grad);
  const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  params.array() -= lr_ * (m_.array() / bc1) / ((v_.array() / bc2).sqrt() + eps_);
}

}  // namespace sfwnav
