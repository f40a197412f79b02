#include "polylab/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "polylab/errors.hpp"

namespace polylab::kernels {

namespace detail {

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

Backend resolve_initial() {
    const char* env = std::getenv("POLYLAB_SIMD");
    std::string want = env ? env : "auto";
    if (want == "scalar") return Backend::scalar;
    if (want == "avx2") {
        if (!avx2_supported()) throw ConfigError("POLYLAB_SIMD=avx2 but CPU lacks avx2/fma");
        return Backend::avx2;
    }
    if (want != "auto" && !want.empty())
        throw ConfigError("POLYLAB_SIMD must be scalar, avx2 or auto (got '" + want + "')");
    return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

std::atomic<const Ops*> g_ops{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

const Ops* table_for(Backend b) {
#if defined(__x86_64__) || defined(_M_X64)
    if (b == Backend::avx2) return &avx2_ops;
#endif
    return &scalar_ops;
}

void ensure_resolved() {
    if (g_ops.load(std::memory_order_acquire) == nullptr) {
        Backend b = resolve_initial();
        g_backend.store(b, std::memory_order_relaxed);
        g_ops.store(table_for(b), std::memory_order_release);
    }
}

}  // namespace
}  // namespace detail

const Ops& ops() {
    detail::ensure_resolved();
    return *detail::g_ops.load(std::memory_order_acquire);
}

Backend active_backend() {
    detail::ensure_resolved();
    return detail::g_backend.load(std::memory_order_relaxed);
}

std::string backend_name() {
    return active_backend() == Backend::avx2 ? "avx2" : "scalar";
}

void set_backend(Backend b) {
    if (b == Backend::avx2 && !detail::avx2_supported())
        throw ConfigError("avx2 backend requested but CPU lacks avx2/fma");
    detail::g_backend.store(b, std::memory_order_relaxed);
    detail::g_ops.store(detail::table_for(b), std::memory_order_release);
}

}  // namespace polylab::kernels
