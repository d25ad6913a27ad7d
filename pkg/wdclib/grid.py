from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np


def shell_radius(level: float) -> float:
    return 1.0 - 2.0 ** (-level)


def shell_level(radius: float) -> float:
    return -np.log2(1.0 - radius)


class DiskGrid(Sequence[np.ndarray]):
    # shell levels 0, 1/m, ..., J with m = sub_shells; level u sits on r = 1 - 2^-u
    # shell u carries min(angles, base_angles 2^ceil(u)) angles, so power-of-two
    # counts share the arguments of coarser shells

    def __init__(
        self,
        shells: int = 16,
        angles: int = 1024,
        *,
        sub_shells: int = 1,
        base_angles: int = 16,
    ):
        if shells < 1 or sub_shells < 1:
            raise ValueError('a grid needs at least one shell and one sub-shell')
        if angles < base_angles:
            raise ValueError(f'angles must be at least {base_angles}, got {angles}')
        self._shells = shells
        self._angles = angles
        self._sub_shells = sub_shells
        self._base_angles = base_angles

        self._levels = np.arange(shells * sub_shells + 1) / sub_shells
        self._radii = 1.0 - 2.0 ** (-self._levels)
        self._counts = tuple(
            1 if u == 0 else min(angles, base_angles * 2 ** int(np.ceil(u)))
            for u in self._levels
        )

    def __getitem__(self, index):
        if isinstance(index, slice):
            return [self[i] for i in range(*index.indices(len(self)))]
        r = self._radii[index]
        n = self._counts[index]
        return r * np.exp(2j * np.pi * np.arange(n) / n)

    def __len__(self):
        return len(self._levels)

    def __iter__(self) -> Iterator[np.ndarray]:
        return (self[i] for i in range(len(self)))

    def __repr__(self):
        return (
            f'DiskGrid(shells={self._shells}, angles={self._angles}, '
            f'sub_shells={self._sub_shells})'
        )

    @property
    def shells(self) -> int:
        return self._shells

    @property
    def angles(self) -> int:
        return self._angles

    @property
    def sub_shells(self) -> int:
        return self._sub_shells

    @property
    def levels(self) -> np.ndarray:
        return self._levels

    @property
    def radii(self) -> np.ndarray:
        return self._radii

    @property
    def counts(self) -> tuple[int, ...]:
        return self._counts

    @property
    def radial_step(self) -> float:
        return 1.0 / self._sub_shells

    def points(self) -> tuple[np.ndarray, np.ndarray]:
        shells = [self[i] for i in range(len(self))]
        index = np.concatenate(
            [np.full(len(s), i, dtype=int) for i, s in enumerate(shells)]
        )
        return np.concatenate(shells), index

    def boundary_points(self) -> np.ndarray:
        return np.exp(2j * np.pi * np.arange(self._angles) / self._angles)

    def refined(self) -> DiskGrid:
        return DiskGrid(
            self._shells + 2,
            self._angles * 2,
            sub_shells=self._sub_shells * 2,
            base_angles=self._base_angles,
        )


def a_grid(shells: int, angles: int, a_max: float) -> list[np.ndarray]:
    # anchors per shell, only radii up to a_max
    result = [np.zeros(1, dtype=complex)]
    phases = np.exp(2j * np.pi * np.arange(angles) / angles)
    for j in range(1, shells + 1):
        r = shell_radius(j)
        if r > a_max:
            break
        result.append(r * phases)
    return result
