import numpy as np


def make_rng(seed):
    """Return a numpy Generator; every stochastic routine draws from one of these."""
    if seed is None:
        raise ValueError("A seed is required for reproducible sampling.")
    return np.random.default_rng(seed)


def sample_measurements(rng, probs, instances):
    """Draw an (instances x n) uint8 matrix whose column i is i.i.d. Bernoulli(probs[i])."""
    probs = np.asarray(probs, dtype=np.float64)
    uniforms = rng.random((instances, len(probs)))
    return (uniforms < probs).astype(np.uint8)


def random_sorted_probs(rng, n, low=0.0, high=1.0):
    """Draw n probabilities uniformly from [low, high) and return them sorted."""
    return tuple(float(p) for p in np.sort(rng.uniform(low, high, size=n)))
