#pragma once

#include <stdexcept>
#include <string>

namespace ugs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inadmissible scenario input.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

// PHY profile or scheduler parameters that cannot be used.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Caller asked for something out of range (unknown flow, frame past horizon).
class UsageError : public Error {
 public:
  using Error::Error;
};

// The engine produced or was asked to apply an infeasible allocation.
class SchedulingError : public Error {
 public:
  SchedulingError(const std::string& what, int frame, int flow_id)
      : Error(what + " (frame " + std::to_string(frame) +
              (flow_id >= 0 ? ", flow " + std::to_string(flow_id) : std::string{}) + ")"),
        frame_(frame),
        flow_id_(flow_id) {}

  int frame() const noexcept { return frame_; }
  int flow_id() const noexcept { return flow_id_; }

 private:
  int frame_;
  int flow_id_;
};

}  // namespace ugs
