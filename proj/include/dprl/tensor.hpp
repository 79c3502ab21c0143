#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace dprl {

// Dense row-major (h, s, a) grid. Small enough that flat vectors beat
// anything fancier for the tabular sizes this library targets.
template <typename T>
class Grid3 {
public:
    Grid3() : d0_(0), d1_(0), d2_(0) {}
    Grid3(int d0, int d1, int d2, T fill = T{})
        : d0_(d0), d1_(d1), d2_(d2),
          data_(static_cast<std::size_t>(d0) * d1 * d2, fill) {}

    T& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
    const T& operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

    int dim0() const { return d0_; }
    int dim1() const { return d1_; }
    int dim2() const { return d2_; }
    std::size_t size() const { return data_.size(); }

    std::vector<T>& raw() { return data_; }
    const std::vector<T>& raw() const { return data_; }

private:
    std::size_t index(int i, int j, int k) const {
        assert(i >= 0 && i < d0_ && j >= 0 && j < d1_ && k >= 0 && k < d2_);
        return (static_cast<std::size_t>(i) * d1_ + j) * d2_ + k;
    }
    int d0_, d1_, d2_;
    std::vector<T> data_;
};

// Dense (h, s, a, s') grid; the innermost axis is contiguous so a
// transition row can be handed out as a span.
template <typename T>
class Grid4 {
public:
    Grid4() : d0_(0), d1_(0), d2_(0), d3_(0) {}
    Grid4(int d0, int d1, int d2, int d3, T fill = T{})
        : d0_(d0), d1_(d1), d2_(d2), d3_(d3),
          data_(static_cast<std::size_t>(d0) * d1 * d2 * d3, fill) {}

    T& operator()(int i, int j, int k, int l) { return data_[index(i, j, k, l)]; }
    const T& operator()(int i, int j, int k, int l) const { return data_[index(i, j, k, l)]; }

    T* row(int i, int j, int k) { return data_.data() + index(i, j, k, 0); }
    const T* row(int i, int j, int k) const { return data_.data() + index(i, j, k, 0); }

    int dim0() const { return d0_; }
    int dim1() const { return d1_; }
    int dim2() const { return d2_; }
    int dim3() const { return d3_; }
    std::size_t size() const { return data_.size(); }

    std::vector<T>& raw() { return data_; }
    const std::vector<T>& raw() const { return data_; }

private:
    std::size_t index(int i, int j, int k, int l) const {
        assert(i >= 0 && i < d0_ && j >= 0 && j < d1_ && k >= 0 && k < d2_ && l >= 0 && l < d3_);
        return ((static_cast<std::size_t>(i) * d1_ + j) * d2_ + k) * d3_ + l;
    }
    int d0_, d1_, d2_, d3_;
    std::vector<T> data_;
};

}  // namespace dprl
