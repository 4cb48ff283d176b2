#include "sleepnet/behaviour.hpp"

#include <array>

namespace sleepnet {

namespace {
const std::array<std::string, kNumClasses> kNames = {
    "nasal_breath", "mouth_breath", "snoring", "bruxism", "csa", "osa",
};
}

const std::string& behaviour_name(BehaviourClass c) {
    const int i = static_cast<int>(c);
    require(i >= 0 && i < kNumClasses, "behaviour_name: invalid class code " + std::to_string(i));
    return kNames[static_cast<std::size_t>(i)];
}

BehaviourClass behaviour_from_code(int code) {
    require(code >= 0 && code < kNumClasses, "behaviour code out of range 0..5: " + std::to_string(code));
    return static_cast<BehaviourClass>(code);
}

BehaviourClass behaviour_from_name(const std::string& name) {
    for (int i = 0; i < kNumClasses; ++i) {
        if (kNames[static_cast<std::size_t>(i)] == name) return static_cast<BehaviourClass>(i);
    }
    fail("unknown behaviour name: " + name);
}

} // namespace sleepnet
