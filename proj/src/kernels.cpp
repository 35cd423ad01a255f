#include "spinchain/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace spinchain::kernels {

const Ops* avx2_ops_if_built();  // defined in kernels_avx2.cpp

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

struct State {
    const Ops* table;
    Backend backend;
};

State pick_initial() {
    const char* env = std::getenv("SPINCHAIN_KERNELS");
    const bool avx2_ok = avx2_ops_if_built() != nullptr && cpu_has_avx2_fma();
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return {&scalar_ops(), Backend::kScalar};
    if (env != nullptr && std::strcmp(env, "avx2") == 0 && avx2_ok)
        return {avx2_ops_if_built(), Backend::kAvx2};
    if (avx2_ok) return {avx2_ops_if_built(), Backend::kAvx2};
    return {&scalar_ops(), Backend::kScalar};
}

State& state() {
    static State s = pick_initial();
    return s;
}

}  // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::kScalar: return "scalar";
        case Backend::kAvx2: return "avx2";
    }
    return "unknown";
}

const Ops& ops() { return *state().table; }

Backend active_backend() { return state().backend; }

bool backend_available(Backend b) {
    if (b == Backend::kScalar) return true;
    return avx2_ops_if_built() != nullptr && cpu_has_avx2_fma();
}

bool set_backend(Backend b) {
    if (!backend_available(b)) return false;
    state() = (b == Backend::kScalar) ? State{&scalar_ops(), Backend::kScalar}
                                      : State{avx2_ops_if_built(), Backend::kAvx2};
    return true;
}

}  // namespace spinchain::kernels
