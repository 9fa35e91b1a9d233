#pragma once

#include <stdexcept>
#include <string>

namespace phaselab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed argument to an operation (empty signal, channel mismatch, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A layer stack whose shapes do not chain, or otherwise unusable NetConfig.
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

// Metric requested on data where it has no definition (e.g. single-class AUC).
class UndefinedMetric : public Error {
 public:
  using Error::Error;
};

// NaN loss/activations during training; carries the last epoch that was fine.
class TrainingDivergence : public Error {
 public:
  TrainingDivergence(const std::string& what, int last_good_epoch)
      : Error(what), last_good_epoch_(last_good_epoch) {}
  int last_good_epoch() const { return last_good_epoch_; }

 private:
  int last_good_epoch_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace phaselab
