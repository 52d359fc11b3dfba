from nature_opt import read_search_space_from_file, optimize
from nature_opt.benchmarks import my_function
from nature_opt.modelfile import example_model_path

if __name__ == "__main__":
    # 10 particles, 2 variables, 100 iterations on [-5.12, 5.12]^2
    s = read_search_space_from_file(example_model_path("PSO"), "PSO")

    result = optimize(s, my_function, "PSO", seed=1)

    print(f"best fitness: {result.best_fitness}")
    print(f"best position: {result.best_position}")
    print(f"evaluations: {result.evaluations}")
