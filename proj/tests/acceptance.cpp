#include "qwalk/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <thread>

int main(int argc, char** argv) {
    qwalk::AcceptanceConfig cfg;
    cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    bool ok = true;
    if (ids.empty()) {
        for (const auto& r : qwalk::run_acceptance(cfg)) {
            std::cout << qwalk::criterion_line(r) << std::endl;
            ok = ok && r.pass;
        }
    } else {
        for (int id : ids) {
            auto r = qwalk::run_criterion(id, cfg);
            std::cout << qwalk::criterion_line(r) << std::endl;
            ok = ok && r.pass;
        }
    }
    return ok ? 0 : 1;
}
