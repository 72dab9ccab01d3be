"""
Maslov index of a sampled boundary frame
=========================================

"""

from opengw.moduli import (
    direct_sum,
    disk_boundary_tangent_loop,
    maslov_index,
    phase_loop,
    riemann_roch_index,
)

# tangent line along the boundary of the unit disk: i * e^{i theta}
for samples in (6, 12, 24, 48):
    print(samples, maslov_index(disk_boundary_tangent_loop(samples)))

# a rank-two normal frame rotating backwards, total class zero
tangent = disk_boundary_tangent_loop(16)
normal = phase_loop([-1, -1], 16)
print(maslov_index(normal), maslov_index(direct_sum(tangent, normal)))

# index of the linearized operator on the disk: n + mu
print(riemann_roch_index(1, 1, 2), riemann_roch_index(2, 1, -2), riemann_roch_index(3, 1, 0))
