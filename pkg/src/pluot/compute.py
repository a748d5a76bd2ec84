"""Compute kernels used during layer ``prepare``: extent reduction and
histogram bin counts.

The CPU backend is the required reference. The GPU backend (torch,
lazily imported) must produce integer-identical bin counts and bit-exact
extents; when no accelerator is present it raises GpuUnavailableError so
callers fall back.
"""

import numpy as np

from .errors import GpuUnavailableError, NoExtentError


def _as_f64(values):
    arr = np.asarray(values)
    if arr.ndim != 1:
        arr = arr.reshape(-1)
    if not np.issubdtype(arr.dtype, np.number):
        raise TypeError(f"values must be numeric, got dtype {arr.dtype}")
    return arr.astype(np.float64, copy=False)


class CpuBackend:
    """Vectorized numpy implementation; the ground truth for any GPU path."""

    name = "cpu"

    def extent(self, values):
        arr = _as_f64(values)
        finite = arr[np.isfinite(arr)]
        if finite.size == 0:
            raise NoExtentError("extent of an empty or all-NaN buffer")
        # +0.0 == -0.0 under IEEE comparisons, which is what we want
        return float(finite.min()), float(finite.max())

    def bin_counts(self, values, lo, hi, n_bins):
        if not lo < hi:
            raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
        if n_bins < 1:
            raise ValueError("n_bins must be >= 1")
        arr = _as_f64(values)
        counts = np.zeros(n_bins, dtype=np.int64)
        if arr.size == 0:
            return counts
        with np.errstate(invalid="ignore"):
            inside = (arr >= lo) & (arr <= hi)
        arr = arr[inside]
        idx = np.floor((arr - lo) / (hi - lo) * n_bins).astype(np.int64)
        idx[idx == n_bins] = n_bins - 1  # v == hi joins the last bin
        counts += np.bincount(idx, minlength=n_bins)
        return counts


class GpuBackend:
    """torch-based kernels on an accelerator device.

    Construction fails with GpuUnavailableError when torch or a device is
    missing; ``device`` can be forced (including "cpu") to exercise the
    tensor kernels without hardware.
    """

    name = "gpu"

    def __init__(self, device=None):
        try:
            import torch
        except ImportError:
            raise GpuUnavailableError("torch is not installed")
        self._torch = torch
        if device is None:
            if torch.cuda.is_available():
                device = "cuda"
            elif getattr(torch.backends, "mps", None) and torch.backends.mps.is_available():
                device = "mps"
            else:
                raise GpuUnavailableError("no CUDA or MPS device available")
        self.device = device

    def _tensor(self, values):
        arr = _as_f64(values)
        return self._torch.from_numpy(np.ascontiguousarray(arr)).to(self.device)

    def extent(self, values):
        t = self._tensor(values)
        finite = t[self._torch.isfinite(t)]
        if finite.numel() == 0:
            raise NoExtentError("extent of an empty or all-NaN buffer")
        return float(finite.min().item()), float(finite.max().item())

    def bin_counts(self, values, lo, hi, n_bins):
        if not lo < hi:
            raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
        if n_bins < 1:
            raise ValueError("n_bins must be >= 1")
        torch = self._torch
        t = self._tensor(values)
        counts = torch.zeros(n_bins, dtype=torch.int64, device=self.device)
        if t.numel():
            inside = (t >= lo) & (t <= hi)
            t = t[inside]
            idx = torch.floor((t - lo) / (hi - lo) * n_bins).to(torch.int64)
            idx = torch.where(idx == n_bins, idx - 1, idx)
            counts.scatter_add_(0, idx, torch.ones_like(idx))
        return counts.cpu().numpy()


def resolve_backend(prefer="cpu"):
    """Return the requested backend, falling back to CPU when the GPU is
    unavailable."""
    if prefer == "gpu":
        try:
            return GpuBackend()
        except GpuUnavailableError:
            return CpuBackend()
    return CpuBackend()


_DEFAULT = CpuBackend()


def extent(values):
    return _DEFAULT.extent(values)


def bin_counts(values, lo, hi, n_bins):
    return _DEFAULT.bin_counts(values, lo, hi, n_bins)
