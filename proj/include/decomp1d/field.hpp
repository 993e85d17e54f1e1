#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>

namespace decomp1d {

/// A real function on [0, L] with a human-readable description.
///
/// Fields are immutable value types; copies share the same callable.
template <typename Scalar>
class ScalarField {
 public:
  using Function = std::function<Scalar(Scalar)>;

  ScalarField() = default;
  ScalarField(Function fn, std::string description)
      : fn_(std::make_shared<const Function>(std::move(fn))), description_(std::move(description)) {}

  Scalar operator()(Scalar x) const { return (*fn_)(x); }

  const std::string& description() const noexcept { return description_; }
  explicit operator bool() const noexcept { return fn_ && *fn_; }

 private:
  std::shared_ptr<const Function> fn_;
  std::string description_;
};

template <typename Scalar>
ScalarField<Scalar> constant_field(Scalar value, std::string description = {}) {
  if (description.empty()) description = "constant";
  return ScalarField<Scalar>([value](Scalar) { return value; }, std::move(description));
}

template <typename Scalar>
ScalarField<Scalar> operator*(const ScalarField<Scalar>& a, const ScalarField<Scalar>& b) {
  return ScalarField<Scalar>([a, b](Scalar x) { return a(x) * b(x); },
                             "(" + a.description() + ")*(" + b.description() + ")");
}

template <typename Scalar>
ScalarField<Scalar> operator-(const ScalarField<Scalar>& a, const ScalarField<Scalar>& b) {
  return ScalarField<Scalar>([a, b](Scalar x) { return a(x) - b(x); },
                             "(" + a.description() + ")-(" + b.description() + ")");
}

template <typename Scalar>
ScalarField<Scalar> operator-(const ScalarField<Scalar>& a) {
  return ScalarField<Scalar>([a](Scalar x) { return -a(x); }, "-(" + a.description() + ")");
}

}  // namespace decomp1d
