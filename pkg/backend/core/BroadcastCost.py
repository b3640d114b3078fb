from abc import ABC, abstractmethod


class BroadcastCost(ABC):
    @abstractmethod
    def name(self) -> str:
        pass

    @abstractmethod
    def cost(self, p: float) -> float:
        pass

    def __call__(self, p):
        return self.cost(p)

    def __repr__(self):
        return self.name()
