__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


def training_flops(n_enc: float, n_dec: float, tokens_in: float, tokens_out: float) -> float:
    """
    FLOPs ≈ 6 · (N_enc · D_in + N_dec · D_out)

    Args:
        n_enc (float):
            Encoder feed-forward parameters.
        n_dec (float):
            Decoder feed-forward parameters.
        tokens_in (float):
            Input cells seen in training.
        tokens_out (float):
            Output (expression) tokens seen in training.
    """
    if min(n_enc, n_dec, tokens_in, tokens_out) < 0:
        raise ValueError('parameter and token counts must be non-negative')
    return 6.0 * (n_enc * tokens_in + n_dec * tokens_out)
