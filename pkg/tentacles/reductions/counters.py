"""
Counter machine reductions: precedence-constrained scheduling and uniform emulation of weighted paths
"""

import logging
from typing import Dict, List, Sequence, Tuple

from core.errors import ReductionError
from tentacles.instances.counters import Nnccm
from tentacles.instances.emulation import WeightedPathEmulationInstance
from tentacles.instances.scheduling import SchedulingInstance
from tentacles.instances.validation import require_valid
from tentacles.reductions.base import Namer, ReductionOutput

logger = logging.getLogger(__name__)


def scheduling_constants(k: int, n: int, r: int) -> Dict[str, int]:
    c = (k * n + 1) * (n + 1)
    return {'machines': 2 * k + 1, 'c': c, 'D': c * r + n + 1, 'width_bound': 3 * (k + 1)}


def nnccm_to_scheduling(m: Nnccm) -> ReductionOutput:
    """
    A time line a_1 < ... < a_D pins every time step. Counter i is a chain of D-n tasks;
    running its y-th task at time y+p means the counter holds p. Check j is repeated
    kn+1 times; at each indicator time only k+1 machines stay free for the time task,
    the k counter tasks and at most one check task running parallel to a counter task.
    A check naming one counter twice with one value leaves no room for a check task.
    """
    require_valid(m)
    k, n, r = m.k, m.n, len(m.checks)
    consts = scheduling_constants(k, n, r)
    c, D = consts['c'], consts['D']
    length = D - n

    tasks = Namer()
    prec: List[Tuple[int, int]] = []
    for t in range(1, D + 1):
        tasks(('a', t))
    for t in range(1, D):
        prec.append((tasks[('a', t)], tasks[('a', t + 1)]))
    for i in range(1, k + 1):
        for y in range(1, length + 1):
            tasks(('c', i, y))
        for y in range(1, length):
            prec.append((tasks[('c', i, y)], tasks[('c', i, y + 1)]))

    indicator_times = []
    for j, (i1, i2, r1, r2) in enumerate(m.checks, start=1):
        double = i1 == i2 and r1 == r2
        for alpha in range(k * n + 1):
            t = (j - 1) * c + alpha * (n + 1) + n + 1
            indicator_times.append(t)
            for x in range(1, (k if double else k - 1) + 1):
                b = tasks(('b', t, x))
                if t > 1:
                    prec.append((tasks[('a', t - 1)], b))
                prec.append((b, tasks[('a', t + 1)]))
            for i, value in sorted({(i1, r1), (i2, r2)}):
                y = t - value
                d = tasks(('d', i, y))
                if y > 1:
                    prec.append((tasks[('c', i, y - 1)], d))
                if y < length:
                    prec.append((d, tasks[('c', i, y + 1)]))

    target = SchedulingInstance(len(tasks), tuple(prec), consts['machines'], D)
    logger.debug(f"scheduling gadget: {len(tasks)} tasks, deadline {D}")
    return ReductionOutput(
        target, target.parameter,
        {**consts, 'indicator_times': len(indicator_times), 'width': target.width},
        {'labels': list(tasks.labels)}
    )


def transfer_nnccm_to_scheduling(m: Nnccm, out: ReductionOutput, trace: Sequence[Sequence[int]]) -> List[int]:
    c, r = out.constants['c'], len(m.checks)

    def value(i: int, y: int) -> int:
        if r == 0:
            return 0
        return trace[min(r, (y - 1) // c + 1) - 1][i - 1]

    slots = []
    for label in out.legend['labels']:
        if label[0] in ('a', 'b'):
            slots.append(label[1])
        else:
            _, i, y = label
            slots.append(y + value(i, y))
    return slots


def emulation_constants(k: int, n: int, r: int) -> Dict[str, int]:
    d1 = 3 * k + 2
    d2 = k * d1 + 1
    d3 = k * d2 + 1
    n0 = 3 * n + 1
    return {'d1': d1, 'd2': d2, 'd3': d3, 'c': 2 * k * d3 + 1, 'n0': n0, 'M': 1 + (r + 1) * n0}


def emulation_machine(m: Nnccm) -> Nnccm:
    """
    Equivalent machine the gadget is built from. A ceiling of 0 becomes 1 with a
    closing check per counter that rejects the value 1, so every counter stays at 0.
    """
    if m.n > 0:
        return m
    guards = tuple((i, i, 1, 1) for i in range(1, m.k + 1))
    return Nnccm(m.k, 1, m.checks + guards)


def emulation_factor(m: Nnccm) -> int:
    machine = emulation_machine(m)
    return emulation_constants(max(machine.k, 3), machine.n, len(machine.checks))['c']


def nnccm_to_uniform_emulation(m: Nnccm) -> ReductionOutput:
    """
    Floor, one counter component per counter, then a weight-1 filler path.

    The floor pins position i to floor vertex i. A counter component walks back to 1,
    turns (weight d2), runs its main path to M and turns again (weight d3); a main path
    vertex mapped to test position n0*j+1 reads the counter value before check j. Heavy
    main path vertices (weight d1, twice that for a check naming one counter twice with
    one value) overflow a test position exactly when check j rejects. A check naming one
    counter with two values never rejects and adds no heavy vertex.

    Turning points are only pinned to the ends when d2 exceeds the 3*d1 room of an
    ordinary position, which needs at least three counters, so idle counters are added
    up to k=3. A ceiling of 0 is built from the equivalent machine of emulation_machine.
    """
    require_valid(m)
    declared = emulation_constants(m.k, m.n, len(m.checks))
    machine = emulation_machine(m)
    k_eff, n, r = max(machine.k, 3), machine.n, len(machine.checks)
    built = emulation_constants(k_eff, n, r)
    d1, d2, d3, c, n0, M = (built[key] for key in ('d1', 'd2', 'd3', 'c', 'n0', 'M'))

    tests = {n0 * j + 1 for j in range(1, r + 1)}
    weights: List[int] = [c - k_eff * d2]
    weights += [c - 2 * d1 + 1 if p in tests else c - 3 * d1 for p in range(2, M)]
    weights.append(c - k_eff * d3 - 1)

    main_length = M - 2 + n
    for counter in range(1, k_eff + 1):
        heavy = [0] * (main_length + 1)
        for j, (i1, i2, r1, r2) in enumerate(machine.checks, start=1):
            if i1 == i2 and r1 != r2:
                continue
            for i, value in ((i1, r1), (i2, r2)):
                if i == counter:
                    heavy[n0 * j + value] += 1
        weights += [1] * (M - 2)
        weights.append(d2)
        weights += [d1 * heavy[i] if heavy[i] else 1 for i in range(1, main_length + 1)]
        weights.append(d3)

    filler = M * c - sum(weights)
    if filler < 0:
        raise ReductionError(f"components outweigh the {M} positions by {-filler}")
    weights += [1] * filler

    target = WeightedPathEmulationInstance(len(weights), M, c, tuple(weights))
    logger.debug(f"emulation gadget: {len(weights)} vertices onto {M} positions, factor {c}")
    return ReductionOutput(
        target, c,
        {
            **declared, 'k_effective': k_eff, 'n_effective': n, 'r_effective': r,
            'c_effective': c, 'M_effective': M, 'filler': filler,
        },
        {'main_length': main_length}
    )


def transfer_nnccm_to_uniform_emulation(m: Nnccm, out: ReductionOutput, trace: Sequence[Sequence[int]]) -> List[int]:
    inst: WeightedPathEmulationInstance = out.target
    machine = emulation_machine(m)
    trace = list(trace) + [[0] * m.k] * (len(machine.checks) - len(m.checks))
    n, r = machine.n, len(machine.checks)
    k_eff, M = out.constants['k_effective'], out.constants['M_effective']
    n0 = 3 * n + 1
    main_length = out.legend['main_length']

    f: List[int] = list(range(1, M + 1))
    for counter in range(1, k_eff + 1):
        values = [trace[j][counter - 1] if counter <= m.k else 0 for j in range(r)] + [n]
        f += list(range(M - 1, 1, -1))
        f.append(1)
        i, p = 1, 2
        while i <= main_length:
            j = (p - 2) // n0 + 1
            window = n0 * (j - 1) + n + 2 <= p <= n0 * j - n
            if window and i - (p - 1) < values[j - 1] and i < main_length:
                f += [p, p]
                i += 2
            else:
                f.append(p)
                i += 1
            p += 1
        f.append(M)

    load = [0] * (M + 1)
    for x, w in zip(f, inst.weights):
        load[x] += w
    for p in range(M, 0, -1):
        f += [p] * (inst.c - load[p])
    return f
