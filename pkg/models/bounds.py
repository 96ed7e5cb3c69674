from pydantic import BaseModel, ConfigDict, Field


class Bounds(BaseModel):
    """会话的界限，全部严格为正"""
    model_config = ConfigDict(frozen=True)

    alphabet: int = Field(default=32, gt=0)
    depth: int = Field(default=10, gt=0)
    unfold: int = Field(default=64, gt=0)
    steps: int = Field(default=4096, gt=0)
    thread_bound: int = Field(default=3, gt=0)

    def with_overrides(self, **overrides) -> "Bounds":
        values = self.model_dump()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return Bounds(**values)
