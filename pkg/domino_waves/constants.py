"""Constants."""


class ColumnNames:
    """Define the output columns of each command.

    Each column pairs the record field (used as JSON key) with its CSV header.
    """

    def __init__(self) -> None:
        """Define default constructor."""
        self.columns = {
            "speed": [
                ("omega_limit", "omega_limit"),
                ("modulus", "modulus"),
                ("fall_time", "fall_time"),
                ("speed", "speed"),
                ("G", "G"),
            ],
            "curve": [
                ("d_over_l", "d_over_l"),
                ("beta1", "beta1_rad"),
                ("f_plus", "f_plus"),
                ("k_modulus", "k_modulus"),
                ("G", "G"),
            ],
            "simulate": [
                ("index", "k"),
                ("omega_i", "omega_i"),
                ("omega_f", "omega_f"),
                ("omega_b", "omega_b"),
                ("fall_time", "T_k"),
                ("cumulative_time", "t_cum"),
                ("instantaneous_speed", "v_k"),
            ],
            "asymptotics": [
                ("x", "x"),
                ("G_exact", "G_exact"),
                ("G_asymptotic", "G_asymptotic"),
                ("relative_error", "relative_error"),
            ],
        }
        self.speed_column = ("v", "v")

    def get_columns(self, command: str, with_speed: bool = False) -> list[tuple[str, str]]:
        """Get the (field, header) pairs for the command."""
        result: list[tuple[str, str]] = list(self.columns[command])
        if with_speed:
            result.append(self.speed_column)
        return result
