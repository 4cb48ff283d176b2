#pragma once

#include <array>
#include <string>

#include "sleepnet/common.hpp"

namespace sleepnet {

/// The six monitored sleep behaviours. Codes 0..5 are stable and used in
/// every persisted file format.
enum class BehaviourClass : int {
    NasalBreath = 0,
    MouthBreath = 1,
    Snoring = 2,
    Bruxism = 3,
    CSA = 4,
    OSA = 5,
};

inline constexpr int kNumClasses = 6;

inline constexpr std::array<BehaviourClass, kNumClasses> all_behaviours() {
    return {BehaviourClass::NasalBreath, BehaviourClass::MouthBreath, BehaviourClass::Snoring,
            BehaviourClass::Bruxism,     BehaviourClass::CSA,         BehaviourClass::OSA};
}

const std::string& behaviour_name(BehaviourClass c);
BehaviourClass behaviour_from_code(int code);
BehaviourClass behaviour_from_name(const std::string& name);

inline int behaviour_code(BehaviourClass c) { return static_cast<int>(c); }

/// Sampling rate of the acquisition chain (Hz) and epoch geometry.
inline constexpr double kSampleRateHz = 100.0;
inline constexpr int kEpochSamples = 1000;
inline constexpr int kNumChannels = 6;

} // namespace sleepnet
