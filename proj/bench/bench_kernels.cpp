#include "qhnf/cli.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace qhnf;

namespace {

PlanarVF family(const Rat& a1, const Rat& b0, const Rat& b2) {
    PlanarVF F;
    F.P = Poly2::y() + Poly2::monomial(2, 0, Rat(-1, 3)) + Poly2::monomial(1, 1, a1);
    F.Q = Poly2::monomial(3, 0, Rat(2)) + Poly2::monomial(1, 1, Rat(-2, 3)) + Poly2::monomial(4, 0, b0) +
          Poly2::monomial(0, 2, b2);
    return F;
}

double seconds(const std::function<void()>& body, int repeats) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / repeats;
}

void compare(const char* name, int repeats, const std::function<void(Exec)>& body) {
    double serial = seconds([&] { body(Exec::Serial); }, repeats);
    double parallel = seconds([&] { body(Exec::Parallel); }, repeats);
    std::printf("%-28s %10.4f %10.4f %8.2fx\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main() {
    const QHType t{1, 2};
    const QHVF lead = vf_component(family(0, 0, 0), t, 1);
    const QHPoly I = QHPoly::make(
        (Poly2::y() - Poly2::monomial(2, 0)) * (Poly2::y() + Poly2::monomial(2, 0)).pow(2), 6, t);

    std::printf("threads: %d\n", max_threads());
    std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");
    compare("op_ell k=80", 3, [&](Exec e) { op_ell(80, lead, e); });
    compare("context precompute N=30", 1, [&](Exec e) { NormalFormContext(lead, I, 30, e); });
    compare("normal form N=14", 1, [&](Exec e) { orbital_normal_form(family(1, 2, 3), t, 14, e); });

    SystemFile sys = parse_system("params a1 b0 b2\ndx = y - (1/3)*x^2 + a1*x*y\n"
                                  "dy = 2*x^3 - (2/3)*x*y + b0*x^4 + b2*y^2\n");
    CommandOptions options;
    options.N = 12;
    options.sweep_points = grid_points({"a1=-1,0,1", "b0=-1,0,1", "b2=-1,0,1"});
    compare("sweep 27 points N=12", 1, [&](Exec e) {
        options.exec = e;
        run_command("sweep", sys, options);
    });
}
