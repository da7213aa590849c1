"""Encoder-decoder transformer over dataset cells.

Every cell of the (points x columns) grid is embedded from its mantissa, its
exponent and the role of its column (input variable i or target). The encoder
alternates attention across the variables of a data point ("column" sublayer)
and across the data points of a variable ("row" sublayer), then an MLP, each
pre-norm with a residual connection. There is no positional signal over data
points, so the encoder is equivariant to row permutations. The decoder is a
causal transformer with learned output positions that cross-attends only to
the target-column cells.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import math
from typing import Optional

# third-party imports
import torch
import torch.nn.functional as F
from torch import nn

# symscale
from symscale.exceptions import SequenceLengthError, ValueRangeError
from symscale.ml.model_config import N_EXPONENTS, ModelConfig
from symscale.tokens.values import MAX_EXPONENT, MIN_EXPONENT


class MultiHeadAttention(nn.Module):
    def __init__(self, dim: int, heads: int, dropout: float) -> None:
        super().__init__()
        self.heads = heads
        self.head_dim = dim // heads
        self.query = nn.Linear(dim, dim)
        self.key = nn.Linear(dim, dim)
        self.value = nn.Linear(dim, dim)
        self.output = nn.Linear(dim, dim)
        self.dropout = nn.Dropout(dropout)

    def _split(self, x: torch.Tensor) -> torch.Tensor:
        batch, length, _ = x.shape
        return x.view(batch, length, self.heads, self.head_dim).transpose(1, 2)

    def forward(self, query: torch.Tensor, memory: torch.Tensor,
                mask: Optional[torch.Tensor] = None) -> torch.Tensor:
        """
        Args:
            query: (batch, Lq, dim)
            memory: (batch, Lk, dim)
            mask: (Lq, Lk) boolean, True where attention is blocked.
        """
        batch, length, dim = query.shape
        q, k, v = self._split(self.query(query)), self._split(self.key(memory)), self._split(self.value(memory))
        scores = q @ k.transpose(-2, -1) / math.sqrt(self.head_dim)
        if mask is not None:
            scores = scores.masked_fill(mask, float('-inf'))
        weights = self.dropout(torch.softmax(scores, dim=-1))
        attended = (weights @ v).transpose(1, 2).reshape(batch, length, dim)
        return self.output(attended)


class FeedForward(nn.Module):
    def __init__(self, dim: int, mlp_dim: int, dropout: float) -> None:
        super().__init__()
        self.up = nn.Linear(dim, mlp_dim)
        self.down = nn.Linear(mlp_dim, dim)
        self.dropout = nn.Dropout(dropout)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        return self.down(self.dropout(F.gelu(self.up(x))))


class CellEmbedder(nn.Module):
    """
    embedding = Linear(mantissa) + ExponentTable[exponent + 100] + RoleTable[column]
    """

    def __init__(self, config: ModelConfig) -> None:
        super().__init__()
        self.n_columns = config.n_vars + 1
        self.mantissa = nn.Linear(1, config.dim)
        self.exponent = nn.Embedding(N_EXPONENTS, config.dim)
        self.role = nn.Embedding(self.n_columns, config.dim)

    def forward(self, mantissas: torch.Tensor, exponents: torch.Tensor) -> torch.Tensor:
        """
        Args:
            mantissas: (batch, rows, n_vars + 1) float
            exponents: (batch, rows, n_vars + 1) integer

        Returns:
            (batch, rows, n_vars + 1, dim)
        """
        if mantissas.shape[-1] != self.n_columns:
            raise ValueError(f'expected {self.n_columns} columns, got {mantissas.shape[-1]}')
        if exponents.numel() and (int(exponents.min()) < MIN_EXPONENT or int(exponents.max()) > MAX_EXPONENT):
            raise ValueRangeError(f'exponent outside [{MIN_EXPONENT}, {MAX_EXPONENT}]')
        roles = torch.arange(self.n_columns, device=exponents.device)
        return (self.mantissa(mantissas.unsqueeze(-1))
                + self.exponent(exponents.long() - MIN_EXPONENT)
                + self.role(roles))


class BiaxialEncoderLayer(nn.Module):
    def __init__(self, config: ModelConfig) -> None:
        super().__init__()
        d, eps = config.dim, config.layer_norm_eps
        self.order = tuple(config.sublayer_order)
        self.column_norm = nn.LayerNorm(d, eps=eps)
        self.column_attention = MultiHeadAttention(d, config.heads, config.attention_dropout)
        self.row_norm = nn.LayerNorm(d, eps=eps)
        self.row_attention = MultiHeadAttention(d, config.heads, config.attention_dropout)
        self.mlp_norm = nn.LayerNorm(d, eps=eps)
        self.mlp = FeedForward(d, config.mlp_dim, config.residual_dropout)
        self.dropout = nn.Dropout(config.residual_dropout)

    def _across_columns(self, x: torch.Tensor) -> torch.Tensor:
        batch, rows, columns, dim = x.shape
        flat = self.column_norm(x).reshape(batch * rows, columns, dim)
        update = self.column_attention(flat, flat).reshape(batch, rows, columns, dim)
        return x + self.dropout(update)

    def _across_rows(self, x: torch.Tensor) -> torch.Tensor:
        batch, rows, columns, dim = x.shape
        flat = self.row_norm(x).transpose(1, 2).reshape(batch * columns, rows, dim)
        update = self.row_attention(flat, flat).reshape(batch, columns, rows, dim).transpose(1, 2)
        return x + self.dropout(update)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        for sublayer in self.order:
            x = self._across_columns(x) if sublayer == 'column' else self._across_rows(x)
        return x + self.dropout(self.mlp(self.mlp_norm(x)))


class DecoderLayer(nn.Module):
    def __init__(self, config: ModelConfig) -> None:
        super().__init__()
        d, eps = config.dim, config.layer_norm_eps
        self.self_norm = nn.LayerNorm(d, eps=eps)
        self.self_attention = MultiHeadAttention(d, config.heads, config.attention_dropout)
        self.cross_norm = nn.LayerNorm(d, eps=eps)
        self.cross_attention = MultiHeadAttention(d, config.heads, config.attention_dropout)
        self.mlp_norm = nn.LayerNorm(d, eps=eps)
        self.mlp = FeedForward(d, config.mlp_dim, config.residual_dropout)
        self.dropout = nn.Dropout(config.residual_dropout)

    def forward(self, x: torch.Tensor, memory: torch.Tensor, causal_mask: torch.Tensor) -> torch.Tensor:
        normed = self.self_norm(x)
        x = x + self.dropout(self.self_attention(normed, normed, causal_mask))
        x = x + self.dropout(self.cross_attention(self.cross_norm(x), memory))
        return x + self.dropout(self.mlp(self.mlp_norm(x)))


class SymbolicTransformer(nn.Module):
    def __init__(self, config: ModelConfig) -> None:
        super().__init__()
        self.config = config
        d = config.dim
        self.embedder = CellEmbedder(config)
        self.encoder_layers = nn.ModuleList([BiaxialEncoderLayer(config) for _ in range(config.encoder_layers)])
        self.memory_norm = nn.LayerNorm(d, eps=config.layer_norm_eps)
        self.token_embedding = nn.Embedding(config.vocab_size, d)
        self.position_embedding = nn.Embedding(config.max_output_length, d)
        self.decoder_layers = nn.ModuleList([DecoderLayer(config) for _ in range(config.decoder_layers)])
        self.output_norm = nn.LayerNorm(d, eps=config.layer_norm_eps)
        self.head = nn.Linear(d, config.vocab_size)
        self.embedding_dropout = nn.Dropout(config.residual_dropout)
        self.apply(self._init_weights)

    def _init_weights(self, module: nn.Module) -> None:
        if isinstance(module, nn.Linear):
            nn.init.normal_(module.weight, mean=0.0, std=self.config.init_scale)
            if module.bias is not None:
                nn.init.zeros_(module.bias)
        elif isinstance(module, nn.Embedding):
            nn.init.normal_(module.weight, mean=0.0, std=self.config.init_scale)

    def embed_cells(self, mantissas: torch.Tensor, exponents: torch.Tensor) -> torch.Tensor:
        return self.embedder(mantissas, exponents)

    def encoder_forward(self, embeddings: torch.Tensor) -> torch.Tensor:
        x = embeddings
        for layer in self.encoder_layers:
            x = layer(x)
        return x

    @staticmethod
    def target_cells(encoded: torch.Tensor) -> torch.Tensor:
        """
        (batch, rows, columns, dim) -> (batch, rows, dim) of the target column.
        """
        return encoded[:, :, -1, :]

    def encode(self, mantissas: torch.Tensor, exponents: torch.Tensor) -> torch.Tensor:
        return self.target_cells(self.encoder_forward(self.embedding_dropout(self.embed_cells(mantissas, exponents))))

    def decoder_forward(self, target_cells: torch.Tensor, tokens: torch.Tensor) -> torch.Tensor:
        """
        Args:
            target_cells: (batch, rows, dim) encoder output of the target column.
            tokens: (batch, length) prefix starting with BOS.

        Returns:
            (batch, length, vocab) next-token logits.
        """
        length = tokens.shape[1]
        if length > self.config.max_output_length:
            raise SequenceLengthError(f'prefix of {length} tokens exceeds {self.config.max_output_length}')
        positions = torch.arange(length, device=tokens.device)
        x = self.embedding_dropout(self.token_embedding(tokens) + self.position_embedding(positions))
        memory = self.memory_norm(target_cells)
        causal_mask = torch.triu(torch.ones(length, length, dtype=torch.bool, device=tokens.device), diagonal=1)
        for layer in self.decoder_layers:
            x = layer(x, memory, causal_mask)
        return self.head(self.output_norm(x))

    def forward(self, mantissas: torch.Tensor, exponents: torch.Tensor, tokens: torch.Tensor) -> torch.Tensor:
        return self.decoder_forward(self.encode(mantissas, exponents), tokens)


def sequence_loss(logits: torch.Tensor, labels: torch.Tensor, pad_id: int, reduction: str = 'mean') -> torch.Tensor:
    """
    Cross-entropy over the non-PAD label positions.

    Raises:
        ValueError:
            Raised if every label is PAD.
    """
    keep = labels != pad_id
    if not bool(keep.any()):
        raise ValueError('loss needs at least one non-PAD target position')
    return F.cross_entropy(logits[keep], labels[keep], reduction=reduction)


def decay_parameter_names(model: SymbolicTransformer):
    """
    Names of the weight matrices that receive weight decay: every Linear
    weight outside the cell embedder.
    """
    names = []
    for module_name, module in model.named_modules():
        if isinstance(module, nn.Linear) and not module_name.startswith('embedder.'):
            names.append(f'{module_name}.weight')
    return names
