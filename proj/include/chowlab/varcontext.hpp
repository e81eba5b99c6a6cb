#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chow {

// Variable layout for one polynomial ring. Index order is
//   [ambient | cube | aux | params]
// and every monomial order in this project compares the parameter block
// last, so formal parameters are the smallest variables. That makes a
// Groebner basis here simultaneously a Groebner basis over the rational
// function field in the parameters (leading terms are read off the
// non-parameter part), which is how "parameters are base-field
// transcendentals" is realized throughout.
//
// Aux variables are internal helpers (saturation, radical membership).
// Their names start with '_' so user input can never collide with them.
class VarContext {
public:
    std::vector<std::string> ambient;
    std::vector<std::string> cube;
    std::vector<std::string> aux;
    std::vector<std::string> params;

    VarContext() = default;

    static std::shared_ptr<const VarContext> make(std::vector<std::string> ambient,
                                                  std::vector<std::string> cube,
                                                  std::vector<std::string> aux = {},
                                                  std::vector<std::string> params = {}) {
        auto c = std::make_shared<VarContext>();
        c->ambient = std::move(ambient);
        c->cube = std::move(cube);
        c->aux = std::move(aux);
        c->params = std::move(params);
        c->check_names();
        return c;
    }

    // Standard names: ambient x1..xm, cube y1..yn.
    static std::shared_ptr<const VarContext> ambient_cube(int m, int n,
                                                          std::vector<std::string> params = {}) {
        std::vector<std::string> xs, ys;
        for (int i = 1; i <= m; ++i) xs.push_back("x" + std::to_string(i));
        for (int i = 1; i <= n; ++i) ys.push_back("y" + std::to_string(i));
        return make(std::move(xs), std::move(ys), {}, std::move(params));
    }

    int n_ambient() const { return (int)ambient.size(); }
    int n_cube() const { return (int)cube.size(); }
    int n_aux() const { return (int)aux.size(); }
    int n_params() const { return (int)params.size(); }
    int n_main() const { return n_ambient() + n_cube() + n_aux(); }
    int total() const { return n_main() + n_params(); }

    const std::string& name(int i) const {
        int m = n_ambient(), n = n_cube(), a = n_aux();
        if (i < m) return ambient[i];
        i -= m;
        if (i < n) return cube[i];
        i -= n;
        if (i < a) return aux[i];
        return params[i - a];
    }

    int ambient_index(int k) const { return k; }
    int cube_index(int k) const { return n_ambient() + k; }
    int aux_index(int k) const { return n_ambient() + n_cube() + k; }
    int param_index(int k) const { return n_main() + k; }

    bool is_cube_index(int i) const { return i >= n_ambient() && i < n_ambient() + n_cube(); }
    bool is_param_index(int i) const { return i >= n_main(); }

    std::optional<int> index_of(const std::string& nm) const {
        for (int i = 0; i < total(); ++i)
            if (name(i) == nm) return i;
        return std::nullopt;
    }

    std::shared_ptr<const VarContext> with_aux(const std::string& nm) const {
        auto c = std::make_shared<VarContext>(*this);
        c->aux.push_back(nm);
        c->check_names();
        return c;
    }

    std::shared_ptr<const VarContext> with_params(const std::vector<std::string>& more) const {
        auto c = std::make_shared<VarContext>(*this);
        for (const auto& p : more)
            if (!c->index_of(p)) c->params.push_back(p);
        c->check_names();
        return c;
    }

    // Context with cube variable k removed (for face computations); the
    // remaining cube variables keep their relative order and get the
    // standard reindexed names.
    std::shared_ptr<const VarContext> drop_cube(int k) const {
        auto c = std::make_shared<VarContext>(*this);
        c->cube.erase(c->cube.begin() + k);
        return c;
    }

    bool same_names(const VarContext& o) const {
        return ambient == o.ambient && cube == o.cube && aux == o.aux && params == o.params;
    }

private:
    void check_names() const {
        for (int i = 0; i < total(); ++i)
            for (int j = i + 1; j < total(); ++j)
                if (name(i) == name(j))
                    throw std::invalid_argument("duplicate variable name: " + name(i));
    }
};

using CtxPtr = std::shared_ptr<const VarContext>;

}  // namespace chow
