#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "langtrack/nn/adagrad.hpp"
#include "langtrack/nn/checkpoint.hpp"
#include "langtrack/nn/dense.hpp"
#include "langtrack/nn/grad_check.hpp"
#include "langtrack/nn/gru.hpp"
#include "langtrack/nn/ops.hpp"
#include "langtrack/rng.hpp"

using namespace langtrack;
using namespace langtrack::nn;

namespace {

// Squared-error head used to drive gradients through a module under test.
double sq_loss(const std::vector<double>& y, const std::vector<double>& target) {
  double loss = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double d = y[i] - target[i];
    loss += d * d;
  }
  return loss;
}

std::vector<double> sq_loss_grad(const std::vector<double>& y,
                                 const std::vector<double>& target) {
  std::vector<double> dy(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) dy[i] = 2.0 * (y[i] - target[i]);
  return dy;
}

std::vector<double> random_vec(std::size_t n, Rng& rng) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-1, 1);
  return v;
}

}  // namespace

TEST_CASE("dense identity and zero layers") {
  Rng rng(1);
  DenseT<double> layer;
  layer.init("d", 3, 3, rng);
  layer.W.value.fill(0.0);
  for (int i = 0; i < 3; ++i) layer.W.value(i, i) = 1.0;
  layer.b.value.fill(0.0);
  std::vector<double> x = {0.3, -1.2, 7.0}, y(3);
  layer.forward(x.data(), y.data());
  CHECK(y == x);

  layer.W.value.fill(0.0);
  layer.forward(x.data(), y.data());
  for (double v : y) CHECK(v == 0.0);
}

TEST_CASE("dense backward matches finite differences below 1e-6") {
  Rng rng(2);
  DenseT<double> layer;
  layer.init("d", 2, 3, rng);
  const auto x = random_vec(2, rng);
  const auto target = random_vec(3, rng);

  auto loss = [&] {
    std::vector<double> y(3);
    layer.forward(x.data(), y.data());
    return sq_loss(y, target);
  };
  zero_grads<double>({&layer.W, &layer.b});
  std::vector<double> y(3);
  layer.forward(x.data(), y.data());
  const auto dy = sq_loss_grad(y, target);
  std::vector<double> dx(2);
  layer.backward(x.data(), dy.data(), dx.data());

  const auto report = grad_check({&layer.W, &layer.b}, loss);
  CHECK(report.passes(1e-6));

  // Input gradient too.
  ParamT<double> xin;
  xin.resize("x", {2});
  xin.value.data = x;
  xin.grad.data = dx;
  auto loss_x = [&] {
    std::vector<double> yy(3);
    layer.forward(xin.value.data.data(), yy.data());
    return sq_loss(yy, target);
  };
  CHECK(grad_check({&xin}, loss_x).passes(1e-6));
}

TEST_CASE("dense shape mismatch is reported") {
  Rng rng(3);
  DenseT<double> a, b;
  a.init("a", 4, 2, rng);
  CHECK(a.in() == 4);
  CHECK(a.out() == 2);
}

TEST_CASE("gru zero parameters halve the previous state") {
  Rng rng(4);
  GruCellT<double> cell;
  cell.init("g", 3, 4, rng);
  cell.W.value.fill(0.0);
  cell.U.value.fill(0.0);
  cell.b.value.fill(0.0);

  const std::vector<double> x = {0.5, -0.25, 1.0};
  const std::vector<double> h_prev = {1.0, -2.0, 0.5, 4.0};
  const auto h = gru_step(cell, x.data(), h_prev.data());
  REQUIRE(h.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(h[i] == doctest::Approx(0.5 * h_prev[i]));
  }

  // And zero previous state stays zero.
  const std::vector<double> zeros(4, 0.0);
  const auto h2 = gru_step(cell, x.data(), zeros.data());
  for (double v : h2) CHECK(v == 0.0);
}

TEST_CASE("gru 5-step BPTT matches finite differences below 1e-4") {
  Rng rng(5);
  GruCellT<double> cell;
  cell.init("g", 3, 4, rng);
  const std::size_t n = 5;
  const auto x = random_vec(n * 3, rng);
  const auto target = random_vec(n * 4, rng);

  auto loss = [&] {
    GruTraceT<double> trace;
    gru_forward(cell, x.data(), n, nullptr, trace);
    return sq_loss(trace.h, target);
  };
  zero_grads<double>({&cell.W, &cell.U, &cell.b});
  GruTraceT<double> trace;
  gru_forward(cell, x.data(), n, nullptr, trace);
  const auto dh = sq_loss_grad(trace.h, target);
  std::vector<double> dx(n * 3, 0.0);
  gru_backward(cell, x.data(), trace, dh.data(), dx.data());

  const auto report = grad_check({&cell.W, &cell.U, &cell.b}, loss);
  CHECK(report.passes(1e-4));

  ParamT<double> xin;
  xin.resize("x", {n * 3});
  xin.value.data = x;
  xin.grad.data = dx;
  auto loss_x = [&] {
    GruTraceT<double> t;
    gru_forward(cell, xin.value.data.data(), n, nullptr, t);
    return sq_loss(t.h, target);
  };
  CHECK(grad_check({&xin}, loss_x).passes(1e-4));
}

TEST_CASE("bigru n=1 equals concatenated single steps") {
  Rng rng(6);
  BiGruT<double> net;
  net.init("bg", 3, 4, rng);
  const auto x = random_vec(3, rng);
  BiGruTraceT<double> trace;
  std::vector<double> y(8);
  bigru_forward(net, x.data(), 1, trace, y.data());

  const std::vector<double> zeros(4, 0.0);
  const auto hf = gru_step(net.fwd, x.data(), zeros.data());
  const auto hb = gru_step(net.bwd, x.data(), zeros.data());
  for (int i = 0; i < 4; ++i) {
    CHECK(y[i] == doctest::Approx(hf[i]));
    CHECK(y[4 + i] == doctest::Approx(hb[i]));
  }
}

TEST_CASE("bigru with equal cells maps palindromes to half-swapped reversals") {
  Rng rng(7);
  BiGruT<double> net;
  net.init("bg", 2, 3, rng);
  net.bwd.W.value = net.fwd.W.value;
  net.bwd.U.value = net.fwd.U.value;
  net.bwd.b.value = net.fwd.b.value;

  // Palindromic 5-step input.
  std::vector<double> x(5 * 2);
  const auto a = random_vec(2, rng), b = random_vec(2, rng), c = random_vec(2, rng);
  auto put = [&](int t, const std::vector<double>& v) {
    x[t * 2] = v[0];
    x[t * 2 + 1] = v[1];
  };
  put(0, a); put(1, b); put(2, c); put(3, b); put(4, a);

  BiGruTraceT<double> trace;
  std::vector<double> y(5 * 6);
  bigru_forward(net, x.data(), 5, trace, y.data());
  // Reversing frames and swapping the direction halves reproduces the output.
  for (int t = 0; t < 5; ++t) {
    for (int j = 0; j < 3; ++j) {
      CHECK(y[t * 6 + j] == doctest::Approx(y[(4 - t) * 6 + 3 + j]));
      CHECK(y[t * 6 + 3 + j] == doctest::Approx(y[(4 - t) * 6 + j]));
    }
  }
}

TEST_CASE("bigru zero parameters give zero outputs and empty input throws") {
  Rng rng(8);
  BiGruT<double> net;
  net.init("bg", 2, 3, rng);
  net.fwd.W.value.fill(0.0);
  net.fwd.U.value.fill(0.0);
  net.fwd.b.value.fill(0.0);
  net.bwd.W.value.fill(0.0);
  net.bwd.U.value.fill(0.0);
  net.bwd.b.value.fill(0.0);
  const auto x = random_vec(4 * 2, rng);
  BiGruTraceT<double> trace;
  std::vector<double> y(4 * 6, 1.0);
  bigru_forward(net, x.data(), 4, trace, y.data());
  for (double v : y) CHECK(v == 0.0);

  CHECK_THROWS_AS(bigru_forward(net, x.data(), 0, trace, y.data()), Error);
}

TEST_CASE("softmax, sigmoid, bce basics") {
  std::vector<double> v(5, 3.7);
  softmax(v.data(), v.size());
  for (double p : v) CHECK(p == doctest::Approx(0.2).epsilon(1e-12));

  Rng rng(9);
  auto logits = random_vec(7, rng);
  auto s = logits;
  softmax(s.data(), s.size());
  double sum = 0.0;
  for (double p : s) sum += p;
  CHECK(std::fabs(sum - 1.0) < 1e-12);

  // Permutation equivariance: rotate inputs, outputs rotate with them.
  std::vector<double> rotated(logits.begin() + 1, logits.end());
  rotated.push_back(logits[0]);
  softmax(rotated.data(), rotated.size());
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    CHECK(rotated[i] == doctest::Approx(s[i + 1]).epsilon(1e-12));
  }

  CHECK(sigmoid(0.0) == 0.5);
  CHECK(bce(0.5, 1.0) == doctest::Approx(std::log(2.0)));
  // Clamp keeps the loss finite at the boundary.
  CHECK(std::isfinite(bce(0.0, 1.0)));
  CHECK(std::isfinite(bce(1.0, 0.0)));
}

TEST_CASE("softmax backward matches finite differences") {
  Rng rng(10);
  auto logits = random_vec(6, rng);
  const auto target = random_vec(6, rng);
  auto loss_of = [&](const std::vector<double>& l) {
    auto p = l;
    softmax(p.data(), p.size());
    return sq_loss(p, target);
  };
  auto p = logits;
  softmax(p.data(), p.size());
  const auto dp = sq_loss_grad(p, target);
  std::vector<double> dl(6);
  softmax_backward(p.data(), dp.data(), dl.data(), 6);

  ParamT<double> lin;
  lin.resize("logits", {6});
  lin.value.data = logits;
  lin.grad.data = dl;
  CHECK(grad_check({&lin}, [&] { return loss_of(lin.value.data); }).passes(1e-6));
}

TEST_CASE("adagrad hand-computed updates") {
  ParamT<double> p;
  p.resize("p", {1});
  p.value[0] = 0.0;
  p.grad[0] = 2.0;
  AdagradT<double> opt(0.1, 0.0);
  opt.step({&p});
  CHECK(p.value[0] == doctest::Approx(-0.1));
  CHECK(p.grad[0] == 0.0);

  // Zero gradient leaves parameters unchanged.
  const double before = p.value[0];
  opt.step({&p});
  CHECK(p.value[0] == before);

  // Two identical unit gradients: steps lr then lr / sqrt(2).
  ParamT<double> q;
  q.resize("q", {1});
  AdagradT<double> opt2(0.1, 0.0);
  q.grad[0] = 1.0;
  opt2.step({&q});
  const double step1 = -q.value[0];
  q.grad[0] = 1.0;
  const double v1 = q.value[0];
  opt2.step({&q});
  const double step2 = v1 - q.value[0];
  CHECK(step1 == doctest::Approx(0.1));
  CHECK(step2 == doctest::Approx(0.1 / std::sqrt(2.0)));
  CHECK(step2 < step1);
}

TEST_CASE("adagrad accumulators never decrease") {
  Rng rng(11);
  ParamT<double> p;
  p.resize("p", {16});
  AdagradT<double> opt(1e-2);
  std::vector<double> prev(16, 0.0);
  for (int it = 0; it < 50; ++it) {
    for (auto& g : p.grad.data) g = rng.uniform(-1, 1);
    opt.step({&p});
    for (int j = 0; j < 16; ++j) {
      CHECK(opt.accumulators[0][j] >= prev[j]);
      prev[j] = opt.accumulators[0][j];
    }
  }
}

TEST_CASE("grad_check detects a corrupted backward pass") {
  Rng rng(12);
  DenseT<double> layer;
  layer.init("d", 3, 2, rng);
  const auto x = random_vec(3, rng);
  const auto target = random_vec(2, rng);
  auto loss = [&] {
    std::vector<double> y(2);
    layer.forward(x.data(), y.data());
    return sq_loss(y, target);
  };
  zero_grads<double>({&layer.W, &layer.b});
  std::vector<double> y(2);
  layer.forward(x.data(), y.data());
  const auto dy = sq_loss_grad(y, target);
  layer.backward(x.data(), dy.data(), nullptr);
  // Corrupt: double the weight gradient.
  for (auto& g : layer.W.grad.data) g *= 2.0;
  const auto report = grad_check({&layer.W, &layer.b}, loss);
  CHECK_FALSE(report.passes(1e-4));
}

TEST_CASE("backward matches finite differences over 20 random seeds") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    Rng rng(seed);
    const std::size_t in = 1 + seed % 5, out = 1 + (seed / 2) % 4;
    DenseT<double> layer;
    layer.init("d", in, out, rng);
    const auto x = random_vec(in, rng);
    const auto target = random_vec(out, rng);
    auto loss = [&] {
      std::vector<double> y(out);
      layer.forward(x.data(), y.data());
      return sq_loss(y, target);
    };
    zero_grads<double>({&layer.W, &layer.b});
    std::vector<double> y(out);
    layer.forward(x.data(), y.data());
    const auto dy = sq_loss_grad(y, target);
    layer.backward(x.data(), dy.data(), nullptr);
    CHECK(grad_check({&layer.W, &layer.b}, loss).passes(1e-6));

    // And a small GRU.
    GruCellT<double> cell;
    cell.init("g", 2 + seed % 3, 2 + seed % 4, rng);
    const std::size_t steps = 1 + seed % 5;
    const auto xs = random_vec(steps * cell.input_size, rng);
    const auto tg = random_vec(steps * cell.hidden_size, rng);
    auto gloss = [&] {
      GruTraceT<double> t;
      gru_forward(cell, xs.data(), steps, nullptr, t);
      return sq_loss(t.h, tg);
    };
    zero_grads<double>({&cell.W, &cell.U, &cell.b});
    GruTraceT<double> t;
    gru_forward(cell, xs.data(), steps, nullptr, t);
    const auto dh = sq_loss_grad(t.h, tg);
    gru_backward(cell, xs.data(), t, dh.data(), nullptr);
    CHECK(grad_check({&cell.W, &cell.U, &cell.b}, gloss).passes(1e-4));
  }
}

TEST_CASE("checkpoint round-trip is byte-identical and checks shapes") {
  namespace fs = std::filesystem;
  Rng rng(13);
  DenseT<double> layer;
  layer.init("head", 4, 3, rng);
  const auto dir = fs::temp_directory_path() / "langtrack_test_ckpt";
  fs::create_directories(dir);

  ParamRefs<double> refs;
  layer.collect(refs);
  save_checkpoint(dir / "a.ckpt", as_const_refs(refs));
  DenseT<double> other;
  other.init("head", 4, 3, rng);
  ParamRefs<double> orefs;
  other.collect(orefs);
  load_checkpoint(dir / "a.ckpt", orefs);
  CHECK(other.W.value.data == layer.W.value.data);
  save_checkpoint(dir / "b.ckpt", as_const_refs(orefs));

  std::ifstream fa(dir / "a.ckpt", std::ios::binary), fb(dir / "b.ckpt", std::ios::binary);
  const std::string ba((std::istreambuf_iterator<char>(fa)), {});
  const std::string bb((std::istreambuf_iterator<char>(fb)), {});
  CHECK(ba == bb);

  DenseT<double> wrong;
  wrong.init("head", 5, 3, rng);
  ParamRefs<double> wrefs;
  wrong.collect(wrefs);
  CHECK_THROWS_AS(load_checkpoint(dir / "a.ckpt", wrefs), ParseError);
}
